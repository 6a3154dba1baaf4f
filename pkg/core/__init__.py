"""Exponents, monomials, ideal representations, configuration and errors."""
