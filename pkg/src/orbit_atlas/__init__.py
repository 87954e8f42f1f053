"""Exact classification data and verification tools for the adjoint
Borel-orbit decomposition of nilradicals in type A, ranks 1 through 4."""

__version__ = "0.1.0"
