"""Exact verification of contact structures and lattices on low-dimensional solvable Lie groups."""

__version__ = "0.1.0"
