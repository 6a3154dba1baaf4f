"""Expression language and the midr command-line front end."""
