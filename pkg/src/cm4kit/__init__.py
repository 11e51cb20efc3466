"""Exact computer algebra for the fourth Calogero-Moser space and the invariant commuting variety."""

__version__ = "0.1.0"
