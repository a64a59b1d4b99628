"""Exact enumeration of alternating-sign matrices and square-ice partition
functions, including the half-turn symmetric classes, with an identity
verification engine and CLI."""

__version__ = "0.1.0"
