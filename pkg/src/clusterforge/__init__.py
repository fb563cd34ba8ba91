"""Exact computations with Caldero-Chapoton characters of acyclic quivers and their generic bases."""

from .laurent import LaurentPolynomial, canonical_string, denominator_vector
from .quiver import Quiver, QuiverError, classify_type, minimal_imaginary_root
from .representation import DecoratedObject, Representation
from .ccmap import cc_map

__all__ = [
    "DecoratedObject",
    "LaurentPolynomial",
    "Quiver",
    "QuiverError",
    "Representation",
    "canonical_string",
    "cc_map",
    "classify_type",
    "denominator_vector",
    "minimal_imaginary_root",
]
__version__ = "0.1.0"
