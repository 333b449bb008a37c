"""Exact combinatorics and characters for super duality of Kac-Moody superalgebras."""

__version__ = "0.1.0"
