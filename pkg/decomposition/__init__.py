"""Decompositions, containment, redundancy and the brute-force oracle."""
