"""
Exact arithmetic: rationals, polynomials and fraction-free elimination
"""

from .polynomial import (
    MPoly,
    UPoly,
    VARIABLES,
    derivative,
    evaluate,
    gcd_free_basis,
    gcd_free_part,
    polynomial_gcd,
    square_free_part,
    upoly_gcd,
)
from .parser import poly_parse, poly_print, parse_polynomial_file
from .elimination import bareiss_determinant, bareiss_rank
from .matrix import QMatrix

__all__ = [
    "MPoly",
    "UPoly",
    "VARIABLES",
    "derivative",
    "evaluate",
    "gcd_free_basis",
    "gcd_free_part",
    "polynomial_gcd",
    "square_free_part",
    "upoly_gcd",
    "poly_parse",
    "poly_print",
    "parse_polynomial_file",
    "bareiss_determinant",
    "bareiss_rank",
    "QMatrix",
]
