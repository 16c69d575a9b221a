"""Exact walk counts, Zagreb indices and Chebyshev-type inequalities on graphs."""

__version__ = "0.1.0"
