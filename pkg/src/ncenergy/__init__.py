"""Laplacian energy of non-commuting graphs of finite groups."""

__version__ = "0.1.0"
