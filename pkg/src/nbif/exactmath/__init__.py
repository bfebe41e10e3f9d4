"""Exact univariate algebra over Q and real algebraic numbers."""
from fractions import Fraction as Rational

from .upoly import (
    UniPoly,
    poly_gcd,
    resultant,
    squarefree_decomposition,
    squarefree_part,
)
from .roots import count_real_roots, isolate_real_roots, sturm_sequence
from .algebraic import RealAlgebraicNumber, alg_cmp, alg_eq, alg_image, alg_image_rational, dedupe

__all__ = [
    "Rational",
    "UniPoly",
    "poly_gcd",
    "resultant",
    "squarefree_decomposition",
    "squarefree_part",
    "count_real_roots",
    "isolate_real_roots",
    "sturm_sequence",
    "RealAlgebraicNumber",
    "alg_cmp",
    "alg_eq",
    "alg_image",
    "alg_image_rational",
    "dedupe",
]
