"""Cubic vertex-transitive graphs of girth 7: invariants, symmetry and classification."""

__version__ = "0.1.0"
