"""
Interval Enclosures
Outward-rounded interval arithmetic on top of mpmath's interval context

These enclosures are the fast path of every sign decision: a sign read from an enclosure that
excludes zero is certain. Zero itself is never decided here.
"""

from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

from mpmath import libmp
from mpmath.ctx_iv import MPIntervalContext

_CONTEXTS: Dict[int, MPIntervalContext] = {}
_UNBOUNDED = (libmp.finf, libmp.fninf, libmp.fnan)

BASE_PRECISION = 64


def interval_context(prec: int) -> MPIntervalContext:
    """A private interval context working at prec bits (cached per precision)"""
    ctx = _CONTEXTS.get(prec)
    if ctx is None:
        ctx = MPIntervalContext()
        ctx.prec = prec
        _CONTEXTS[prec] = ctx
    return ctx


def precision_for(width: Fraction, extra: int = 0) -> int:
    """Working precision suited to an input box of the given width"""
    if width <= 0:
        return BASE_PRECISION + extra
    bits = max(width.denominator.bit_length() - width.numerator.bit_length(), 0)
    return BASE_PRECISION + bits + extra


def rational_interval(ctx: MPIntervalContext, lo: Fraction, hi: Fraction):
    """Smallest representable interval containing [lo, hi]"""
    a = libmp.from_rational(lo.numerator, lo.denominator, ctx.prec, libmp.round_floor)
    b = libmp.from_rational(hi.numerator, hi.denominator, ctx.prec, libmp.round_ceiling)
    return ctx.make_mpf((a, b))


def rational_point(ctx: MPIntervalContext, value: Fraction):
    return rational_interval(ctx, value, value)


def evaluate_univariate(ctx: MPIntervalContext, coefficients: Sequence[Fraction], box):
    """Horner enclosure of sum c_k X^k over the interval box"""
    acc = ctx.mpf(0)
    for c in reversed(coefficients):
        acc = acc * box + rational_point(ctx, c)
    return acc


def evaluate_terms(
    ctx: MPIntervalContext,
    terms: Mapping[Tuple[int, ...], Fraction],
    boxes: Sequence,
):
    """Enclosure of a sparse polynomial; boxes[i] encloses variable i (None if unused)"""
    acc = ctx.mpf(0)
    powers: Dict[Tuple[int, int], object] = {}
    for exponent, c in terms.items():
        value = rational_point(ctx, c)
        for index, e in enumerate(exponent):
            if e == 0:
                continue
            key = (index, e)
            if key not in powers:
                powers[key] = boxes[index] ** e
            value = value * powers[key]
        acc = acc + value
    return acc


def certain_sign(value) -> Optional[int]:
    """+1 or -1 when the enclosure excludes zero, otherwise None"""
    if (value > 0) is True:
        return 1
    if (value < 0) is True:
        return -1
    return None


def hull(ctx: MPIntervalContext, lower, upper):
    """Interval from the lower end of one enclosure to the upper end of another"""
    return ctx.make_mpf((lower._mpi_[0], upper._mpi_[1]))


def nonnegative_part(ctx: MPIntervalContext, value):
    """Intersection with [0, inf); callers guarantee the true value is non-negative"""
    a, b = value._mpi_
    if libmp.mpf_lt(a, libmp.fzero):
        a = libmp.fzero
    if libmp.mpf_lt(b, libmp.fzero):
        b = libmp.fzero
    return ctx.make_mpf((a, b))


def fraction_bounds(value) -> Optional[Tuple[Fraction, Fraction]]:
    """Exact rational endpoints of an enclosure, or None when it is unbounded"""
    a, b = value._mpi_
    if a in _UNBOUNDED or b in _UNBOUNDED:
        return None
    return Fraction(*libmp.to_rational(a)), Fraction(*libmp.to_rational(b))


def width_of(value) -> Optional[Fraction]:
    bounds = fraction_bounds(value)
    if bounds is None:
        return None
    return bounds[1] - bounds[0]
