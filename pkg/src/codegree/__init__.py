"""Exact verification tools for a codegree solvability criterion."""

from codegree.exact import BACKEND, ExactRational, FactoredInteger, Ordering, factorize, rat_cmp

__version__ = "0.1.0"

__all__ = ["BACKEND", "ExactRational", "FactoredInteger", "Ordering", "factorize", "rat_cmp", "__version__"]
