"""Exact arithmetic over Z, Q and Q[t^{+-1}]."""

from .laurent import LaurentPoly, is_monic, normalize_poly, parse_poly
from .matrix import (
    IntMatrix,
    LaurentMatrix,
    abelian_invariants,
    quotient_module_order,
    rank_over_fraction_field,
    smith_normal_form,
)

__all__ = [
    "IntMatrix",
    "LaurentMatrix",
    "LaurentPoly",
    "abelian_invariants",
    "is_monic",
    "normalize_poly",
    "parse_poly",
    "quotient_module_order",
    "rank_over_fraction_field",
    "smith_normal_form",
]
