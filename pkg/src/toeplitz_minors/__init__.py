"""Exact Toeplitz determinants, minors and inverses through symmetric functions."""

__version__ = "0.1.0"
