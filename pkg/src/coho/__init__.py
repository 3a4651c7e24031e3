"""Exact root-system computations for vanishing degrees of real reductive groups."""

__version__ = "0.1.0"
