"""Mechanical classification of bipartite intrinsically knotted graphs with at most 22 edges."""

__version__ = "0.1.0"
