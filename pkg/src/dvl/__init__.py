"""Exact vanishing tests for L(1, f) and L(k, f) of rational periodic functions."""

__version__ = "0.1.0"
