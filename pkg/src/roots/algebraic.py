"""
Real Algebraic Numbers
Root isolation, exact sign determination, comparison and refinement

A real algebraic number is a square-free defining polynomial plus a rational interval holding
exactly one of its roots. Interval enclosures answer most sign questions; zero signs are only
ever certified through a gcd with the defining polynomial.
"""

import logging
from fractions import Fraction
from math import ceil, floor
from typing import List, Optional, Sequence, Tuple, Union

from src.arith.polynomial import MPoly, UPoly, to_fraction, upoly_gcd
from src.core.errors import InvariantBreach, ZeroPolynomialError
from src.roots.intervals import (
    certain_sign,
    evaluate_univariate,
    interval_context,
    precision_for,
    rational_interval,
)

logger = logging.getLogger(__name__)

REFINEMENT_LIMIT = 4000

Rational = Union[int, Fraction]


def set_refinement_limit(limit: int) -> None:
    """Bisection steps any single decision may spend before giving up"""
    global REFINEMENT_LIMIT
    if limit < 1:
        raise ValueError("refinement limit must be positive")
    REFINEMENT_LIMIT = limit


def _sign(value) -> int:
    return (value > 0) - (value < 0)


def _evaluate_ints(coefficients: Sequence[int], value: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coefficients):
        acc = acc * value + c
    return acc


class AlgebraicNumber:
    """
    A real root of a square-free polynomial with rational coefficients

    The interval [lo, hi] contains exactly one root of ``defining``. For irrational values
    lo < hi and the defining polynomial has opposite signs at the endpoints; rational values
    are stored degenerate with lo == hi. Refinement only ever shrinks the interval.
    """

    __slots__ = ("defining", "lo", "hi", "_ints", "_sign_lo")

    def __init__(self, defining: UPoly, lo: Rational, hi: Rational):
        self.defining = defining
        self.lo = to_fraction(lo)
        self.hi = to_fraction(hi)
        self._ints = defining.integer_coefficients()
        self._sign_lo = 0
        if self.lo > self.hi:
            raise ValueError(f"empty isolating interval [{self.lo}, {self.hi}]")
        if self.lo < self.hi:
            self._sign_lo = _sign(_evaluate_ints(self._ints, self.lo))
            sign_hi = _sign(_evaluate_ints(self._ints, self.hi))
            if self._sign_lo * sign_hi >= 0:
                raise InvariantBreach(
                    f"[{self.lo}, {self.hi}] does not isolate a root of {defining.to_text()}"
                )

    @classmethod
    def from_rational(cls, value: Rational, var: str = "x") -> "AlgebraicNumber":
        value = to_fraction(value)
        return cls(UPoly.linear_root(value, var), value, value)

    @property
    def var(self) -> str:
        return self.defining.var

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("value is not known to be rational")
        return self.lo

    def bounds(self) -> Tuple[Fraction, Fraction]:
        return self.lo, self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self) -> None:
        """Halve the isolating interval"""
        if self.is_rational:
            return
        mid = (self.lo + self.hi) / 2
        s = _sign(_evaluate_ints(self._ints, mid))
        if s == 0:
            self.lo = self.hi = mid
        elif s == self._sign_lo:
            self.lo = mid
        else:
            self.hi = mid

    def refine_to(self, width: Rational) -> "AlgebraicNumber":
        width = to_fraction(width)
        if width <= 0:
            raise ValueError("target width must be positive")
        while self.hi - self.lo > width:
            self.refine()
        return self

    def enclosure(self, ctx):
        return rational_interval(ctx, self.lo, self.hi)

    def approximate(self) -> float:
        if not self.is_rational:
            scale = max(abs(self.lo), abs(self.hi), Fraction(1))
            self.refine_to(scale / 2 ** 60)
        return float((self.lo + self.hi) / 2)

    def __float__(self) -> float:
        return self.approximate()

    def __repr__(self) -> str:
        if self.is_rational:
            return f"AlgebraicNumber({self.lo})"
        return f"AlgebraicNumber({self.defining.to_text()}, [{self.lo}, {self.hi}])"

    def __getstate__(self):
        return {"defining": self.defining, "lo": self.lo, "hi": self.hi}

    def __setstate__(self, state):
        self.defining = state["defining"]
        self.lo = state["lo"]
        self.hi = state["hi"]
        self._ints = self.defining.integer_coefficients()
        self._sign_lo = _sign(_evaluate_ints(self._ints, self.lo)) if self.lo < self.hi else 0


def as_algebraic(value: Union[AlgebraicNumber, Rational], var: str = "x") -> AlgebraicNumber:
    if isinstance(value, AlgebraicNumber):
        return value
    return AlgebraicNumber.from_rational(value, var)


# -- isolation ----------------------------------------------------------------------------------


def _isolated(reduced: UPoly, lo: Fraction, hi: Fraction) -> AlgebraicNumber:
    """The root of a square-free polynomial in [lo, hi], degenerate when it sits on an end"""
    ints = reduced.integer_coefficients()
    for end in (lo, hi):
        if _evaluate_ints(ints, end) == 0:
            return AlgebraicNumber.from_rational(end, reduced.var)
    return AlgebraicNumber(reduced, lo, hi)


def _recognize_rational(number: AlgebraicNumber) -> None:
    """Turn the number degenerate when it is rational"""
    ints = number._ints
    lead = abs(ints[-1])
    target = Fraction(1, lead * lead)
    while not number.is_rational and number.width >= target:
        number.refine()
    if number.is_rational:
        return
    candidate = ((number.lo + number.hi) / 2).limit_denominator(lead)
    if number.lo < candidate < number.hi and _evaluate_ints(ints, candidate) == 0:
        number.lo = number.hi = candidate


def _as_univariate(poly: Union[UPoly, MPoly], var: str) -> UPoly:
    if isinstance(poly, UPoly):
        return poly if poly.var == var else UPoly(poly.coefficients, var)
    used = poly.variables()
    if not used:
        return UPoly.constant(poly.constant_value(), var)
    if len(used) > 1:
        raise ValueError(f"{poly.to_text()} is not univariate")
    return UPoly(poly.to_upoly(used[0]).coefficients, var)


def isolate_real_roots(
    poly: Union[UPoly, MPoly], exact_rationals: bool = True, var: Optional[str] = None
) -> List[AlgebraicNumber]:
    """
    All real roots, increasing, with pairwise disjoint isolating intervals

    Args:
        poly: nonzero univariate polynomial; it need not be square-free
        exact_rationals: detect every rational root and store it degenerate (roots the
            isolation meets exactly are always stored that way)
        var: variable tag of the results (defaults to the polynomial's)

    Returns:
        Sorted list of AlgebraicNumber

    Raises:
        ZeroPolynomialError: when poly is zero
    """
    if isinstance(poly, MPoly):
        used = poly.variables()
        tag = var or ("x1" if not used else ["x1", "x2", "x3"][used[0]])
        poly = _as_univariate(poly, tag)
    elif var is not None:
        poly = _as_univariate(poly, var)
    if poly.is_zero:
        raise ZeroPolynomialError("cannot isolate the roots of the zero polynomial")
    if poly.degree < 1:
        return []

    reduced = poly.square_free()
    roots = []
    for lo, hi in reduced.sympy.intervals(sqf=True):
        number = _isolated(reduced, to_fraction(lo), to_fraction(hi))
        if exact_rationals:
            _recognize_rational(number)
        if number.is_rational:
            number = AlgebraicNumber.from_rational(number.lo, poly.var)
        roots.append(number)
    roots.sort(key=lambda r: (r.lo, r.hi))
    logger.debug(f"Isolated {len(roots)} real roots of a degree {poly.degree} polynomial")
    return roots


def count_real_roots(poly: Union[UPoly, MPoly]) -> int:
    if isinstance(poly, MPoly) and poly.is_constant:
        return 0
    return len(isolate_real_roots(poly, exact_rationals=False))


# -- sign determination -------------------------------------------------------------------------


def interval_sign(poly: UPoly, alpha: AlgebraicNumber) -> Optional[int]:
    """Sign of poly(alpha) read from an interval enclosure, or None when undecided"""
    ctx = interval_context(precision_for(alpha.width, extra=poly.degree))
    value = evaluate_univariate(ctx, poly.coefficients, alpha.enclosure(ctx))
    return certain_sign(value)


def sign_at(poly: Union[UPoly, MPoly], alpha: Union[AlgebraicNumber, Rational]) -> int:
    """
    Exact sign of a univariate polynomial at a real algebraic number

    A zero sign is certified by the gcd of poly with the defining polynomial of alpha having
    its root inside the isolating interval; nonzero signs come from interval enclosures on
    refined intervals.

    Args:
        poly: UPoly, or an MPoly that involves at most one variable
        alpha: the point

    Returns:
        -1, 0 or +1
    """
    alpha = as_algebraic(alpha)
    p = _as_univariate(poly, alpha.var)
    if p.is_zero:
        return 0
    if p.is_constant:
        return _sign(p.leading_coefficient)
    if alpha.is_rational:
        return p.sign_at_rational(alpha.lo)

    s = interval_sign(p, alpha)
    if s is not None:
        return s
    g = upoly_gcd(p, alpha.defining)
    if g.degree >= 1 and not alpha.is_rational:
        if g.sign_at_rational(alpha.lo) * g.sign_at_rational(alpha.hi) < 0:
            return 0
    for _ in range(REFINEMENT_LIMIT):
        alpha.refine()
        if alpha.is_rational:
            return p.sign_at_rational(alpha.lo)
        s = interval_sign(p, alpha)
        if s is not None:
            return s
    raise InvariantBreach(f"sign of {p.to_text()} undecided after {REFINEMENT_LIMIT} steps")


def _contains_root_of(g: UPoly, alpha: AlgebraicNumber) -> bool:
    if alpha.is_rational:
        return g.evaluate(alpha.lo) == 0
    return sign_at(g, alpha) == 0


def compare(alpha: Union[AlgebraicNumber, Rational], beta: Union[AlgebraicNumber, Rational]) -> int:
    """
    Exact comparison

    Returns:
        -1, 0 or +1 as alpha is less than, equal to or greater than beta
    """
    alpha, beta = as_algebraic(alpha), as_algebraic(beta)
    if alpha is beta:
        return 0
    equality_checked = False
    for _ in range(REFINEMENT_LIMIT):
        if alpha.hi < beta.lo:
            return -1
        if beta.hi < alpha.lo:
            return 1
        if alpha.is_rational and beta.is_rational:
            return 0
        if not equality_checked:
            equality_checked = True
            if _equal(alpha, beta):
                return 0
        if alpha.width >= beta.width:
            alpha.refine()
        else:
            beta.refine()
    raise InvariantBreach("comparison undecided after the refinement limit")


def _equal(alpha: AlgebraicNumber, beta: AlgebraicNumber) -> bool:
    if alpha.is_rational:
        return beta.lo <= alpha.lo <= beta.hi and _contains_root_of(beta.defining, alpha)
    if beta.is_rational:
        return alpha.lo <= beta.lo <= alpha.hi and _contains_root_of(alpha.defining, beta)
    g = upoly_gcd(alpha.defining, UPoly(beta.defining.coefficients, alpha.var))
    if g.degree < 1:
        return False
    if sign_at(g, alpha) != 0 or sign_at(UPoly(g.coefficients, beta.var), beta) != 0:
        return False
    # alpha is the only root of g in its interval
    for _ in range(REFINEMENT_LIMIT):
        if alpha.lo <= beta.lo and beta.hi <= alpha.hi:
            return True
        if beta.hi < alpha.lo or alpha.hi < beta.lo:
            return False
        beta.refine()
    raise InvariantBreach("equality test undecided after the refinement limit")


def refine(alpha: AlgebraicNumber, width: Rational) -> AlgebraicNumber:
    """Shrink the isolating interval of alpha to at most the given width"""
    return alpha.refine_to(width)


# -- sample points ------------------------------------------------------------------------------


def _separate(left: AlgebraicNumber, right: AlgebraicNumber) -> None:
    for _ in range(REFINEMENT_LIMIT):
        if left.hi < right.lo:
            return
        if left.width >= right.width and not left.is_rational:
            left.refine()
        else:
            right.refine()
    raise InvariantBreach("adjacent roots could not be separated")


def sample_between(roots: Sequence[AlgebraicNumber]) -> List[Fraction]:
    """
    One rational strictly inside each open interval cut out by the sorted roots

    Below the first root the sample is floor(lo) of an interval refined to width at most one
    (ceil(r) - 1 for a rational r); above the last root it is ceil(hi) (floor(r) + 1). Between
    neighbours it is the midpoint of the gap between their separated intervals. An empty list
    yields [0].
    """
    if not roots:
        return [Fraction(0)]
    first, last = roots[0], roots[-1]
    first.refine_to(1)
    if first.is_rational:
        below = Fraction(ceil(first.lo) - 1)
    else:
        below = Fraction(floor(first.lo))
    samples = [below]
    for left, right in zip(roots, roots[1:]):
        _separate(left, right)
        samples.append((left.hi + right.lo) / 2)
    last.refine_to(1)
    if last.is_rational:
        above = Fraction(floor(last.hi) + 1)
    else:
        above = Fraction(ceil(last.hi))
    samples.append(above)
    return samples
