"""Exact invariants of isolated hypersurface singularities and their deformations."""

__version__ = "0.1.0"
