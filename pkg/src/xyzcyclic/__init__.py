"""Quantum XYZ cyclic codes: construction, distance estimation and noise simulation."""

__version__ = "0.1.0"
