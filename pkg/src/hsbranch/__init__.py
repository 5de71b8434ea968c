"""Exact branching of holomorphic discrete series to the distinguished SL(2) subgroup."""

__version__ = "0.1.0"
