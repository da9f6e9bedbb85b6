"""Spectral analysis of Hankel operators in kernel, matrix and ΨDO form."""

__version__ = "0.1.0"
