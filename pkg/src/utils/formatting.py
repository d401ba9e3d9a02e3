"""
Decimal Formatting
Exact values printed as decimals with a fixed number of significant digits
"""

from fractions import Fraction
from typing import Sequence, Tuple

from mpmath import mpf, nstr, workdps

from src.core.errors import InvariantBreach
from src.roots import algebraic
from src.roots.values import Value, bounds_of, exact_of, refine_value


def _to_mpf(value: Fraction):
    return mpf(value.numerator) / value.denominator


def tight_bounds(value: Value, precision: int) -> Tuple[Fraction, Fraction]:
    """Refine until the bounds agree to well beyond ``precision`` digits"""
    for _ in range(algebraic.REFINEMENT_LIMIT):
        lo, hi = bounds_of(value)
        scale = max(Fraction(1), abs(lo), abs(hi))
        if hi - lo <= scale / 10 ** (precision + 3):
            return lo, hi
        refine_value(value)
    raise InvariantBreach(f"value not refined to {precision} digits")


def to_decimal(value: Value, precision: int = 15) -> str:
    """
    Decimal text of an exact value

    Integers print exactly; everything else with ``precision`` significant digits.
    """
    known = exact_of(value)
    if known is not None and known.denominator == 1:
        return str(known.numerator)
    lo, hi = (known, known) if known is not None else tight_bounds(value, precision)
    with workdps(precision + 10):
        return nstr((_to_mpf(lo) + _to_mpf(hi)) / 2, precision)


def point_text(coordinates: Sequence[Value], precision: int = 15) -> str:
    return "(" + ", ".join(to_decimal(c, precision) for c in coordinates) + ")"
