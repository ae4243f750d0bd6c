"""Exact Hamming-like bounds for degenerate stabilizer codes."""

__version__ = "0.1.0"
