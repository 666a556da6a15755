"""Exact computational verification of bigraded superspace coinvariant rings."""

__version__ = "0.1.0"
