"""Induced-matching cut widths, neighbor-depth and dynamic programs over branch decompositions."""

__version__ = "0.1.0"
