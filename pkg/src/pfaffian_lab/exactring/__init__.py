"""Exact coefficient arithmetic."""

from .poly import (
    NO_TRUNCATION,
    ONE,
    ZERO,
    Poly,
    TruncationPolicy,
    format_coeff,
    parse_poly,
    poly_add,
    poly_exact_div,
    poly_mul,
    rational,
    var,
    xvars,
)
from .ratfunc import RationalFunction
from .series import INF, geometric, pochhammer, pochhammer_inverse, series_inverse

__all__ = [
    "INF",
    "NO_TRUNCATION",
    "ONE",
    "ZERO",
    "Poly",
    "RationalFunction",
    "TruncationPolicy",
    "format_coeff",
    "geometric",
    "parse_poly",
    "pochhammer",
    "pochhammer_inverse",
    "poly_add",
    "poly_exact_div",
    "poly_mul",
    "rational",
    "series_inverse",
    "var",
    "xvars",
]
