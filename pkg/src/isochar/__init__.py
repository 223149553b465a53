"""Bigraded characters of the normalized isospectral commuting variety."""

__version__ = "0.1.0"
