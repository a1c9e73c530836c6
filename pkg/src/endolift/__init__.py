"""Exact combinatorics for the lift from Sp(2g) to PGL(2g+1)."""

__version__ = "0.1.0"
