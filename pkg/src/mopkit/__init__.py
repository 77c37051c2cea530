"""Exact construction and verification of multiple orthogonal polynomials."""
from .arith import ComplexRational, Poly, cq
from .families import FamilySpec, build, build_all

__all__ = ["ComplexRational", "Poly", "cq", "FamilySpec", "build", "build_all"]
__version__ = "0.1.0"
