"""Ray merges, pure-power collapsing and finitely generated ideals."""
