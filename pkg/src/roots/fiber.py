"""
Fiber Roots
Real roots of a bivariate polynomial h(x, Y) above a fixed abscissa x

Above a rational abscissa the fiber is an ordinary univariate polynomial and is isolated
exactly. Above an irrational abscissa the number of distinct real roots comes from the
Sturm-Habicht ladder of (h, dh/dY), and the simple roots are isolated by subdivision with exact
sign tests at rational ordinates.
"""

import logging
from fractions import Fraction
from math import ceil
from typing import Dict, List, Optional, Tuple, Union

from src.arith.polynomial import MPoly
from src.core.errors import InvariantBreach, NotGenericError
from src.roots import algebraic
from src.roots.algebraic import AlgebraicNumber, Rational, isolate_real_roots, sign_at
from src.roots.intervals import (
    certain_sign,
    evaluate_terms,
    fraction_bounds,
    interval_context,
    precision_for,
    rational_interval,
)
from src.roots.values import CriticalOrdinate, RealValue, Value, bounds_of, exact_of
from src.subresultants.sequence import (
    SignedSubresultantSequence,
    count_distinct_real_roots,
    signed_subresultants,
)

logger = logging.getLogger(__name__)

_LADDERS: Dict[MPoly, SignedSubresultantSequence] = {}


def discriminant_ladder(h: MPoly) -> SignedSubresultantSequence:
    """The (h, dh/dx2) ladder, cached per curve"""
    seq = _LADDERS.get(h)
    if seq is None:
        seq = signed_subresultants(h, h.derivative(1), 1)
        _LADDERS[h] = seq
    return seq


def sign_on_fiber(h: MPoly, x: AlgebraicNumber, y: Fraction) -> int:
    """Exact sign of h(x, y) for a rational ordinate y"""
    return sign_at(h.evaluate({1: y}), x)


class FiberRoot(RealValue):
    """
    A simple root of h(x, Y) above an algebraic abscissa x

    h takes opposite signs at (x, lo) and (x, hi) and has no other root in between. Refinement
    bisects with exact sign tests.
    """

    def __init__(self, curve: MPoly, x: AlgebraicNumber, lo: Rational, hi: Rational):
        self.curve = curve
        self.x = x
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._sign_lo = sign_on_fiber(curve, x, self.lo) if self.lo < self.hi else 0

    def exact(self) -> Optional[Fraction]:
        return self.lo if self.lo == self.hi else None

    def bounds(self) -> Tuple[Fraction, Fraction]:
        return self.lo, self.hi

    def refine(self) -> None:
        if self.lo == self.hi:
            return
        mid = (self.lo + self.hi) / 2
        s = sign_on_fiber(self.curve, self.x, mid)
        if s == 0:
            self.lo = self.hi = mid
        elif s == self._sign_lo:
            self.lo = mid
        else:
            self.hi = mid

    def __repr__(self) -> str:
        return f"FiberRoot({self.curve.to_text()}, [{self.lo}, {self.hi}])"


def count_real_roots_in_fiber(
    poly: MPoly,
    x: Union[AlgebraicNumber, Rational],
    seq: Optional[SignedSubresultantSequence] = None,
) -> int:
    """
    Number of distinct real roots of poly(x, X2)

    Args:
        poly: bivariate polynomial, regular in x2
        x: the abscissa
        seq: precomputed (poly, dpoly/dx2) ladder

    Raises:
        NotGenericError: the fiber polynomial vanishes identically
    """
    if isinstance(x, AlgebraicNumber) and x.is_rational:
        x = x.lo
    if not isinstance(x, AlgebraicNumber):
        fiber = poly.evaluate({0: x})
        if fiber.is_zero:
            raise NotGenericError("regularity", f"vertical line x1 = {x}")
        if fiber.is_constant:
            return 0
        return len(isolate_real_roots(fiber, exact_rationals=False, var="x2"))
    degree = poly.degree(1)
    if degree < 1:
        return 0
    if degree == 1:
        return 1
    return count_distinct_real_roots(seq or discriminant_ladder(poly), x)


def fiber_roots_at_rational(poly: MPoly, s: Rational) -> List[AlgebraicNumber]:
    """Isolated roots of poly(s, X2), exact"""
    fiber = poly.evaluate({0: s})
    if fiber.is_zero:
        raise NotGenericError("regularity", f"vertical line x1 = {s}")
    if fiber.is_constant:
        return []
    return isolate_real_roots(fiber, var="x2")


def _cauchy_bound(poly: MPoly, x: AlgebraicNumber) -> Fraction:
    coefficients = poly.coefficients_in(1)
    lead = abs(coefficients[-1].constant_value())
    ctx = interval_context(precision_for(x.width, 16))
    box = x.enclosure(ctx)
    largest = Fraction(0)
    for c in coefficients[:-1]:
        value = evaluate_terms(ctx, c.terms(), [box, None, None])
        bounds = fraction_bounds(value)
        if bounds is None:
            raise InvariantBreach("unbounded coefficient enclosure")
        largest = max(largest, abs(bounds[0]), abs(bounds[1]))
    return Fraction(ceil(1 + largest / lead))


def _overlaps(a: Fraction, b: Fraction, value: RealValue) -> bool:
    lo, hi = bounds_of(value)
    return a <= hi and lo <= b


def _equals_exclusion(y: Fraction, exclude: Optional[RealValue], x: AlgebraicNumber) -> bool:
    if exclude is None:
        return False
    known = exact_of(exclude)
    if known is not None:
        return known == y
    if isinstance(exclude, CriticalOrdinate):
        return sign_at(exclude.num - exclude.den * y, x) == 0
    lo, hi = bounds_of(exclude)
    return lo <= y <= hi and sign_at(exclude.curve.evaluate({1: y}), x) == 0


class _Subdivision:
    def __init__(self, poly: MPoly, x: AlgebraicNumber, exclude: Optional[RealValue]):
        self.poly = poly
        self.derivative = poly.derivative(1)
        self.x = x
        self.exclude = exclude
        self.signs: Dict[Fraction, int] = {}
        self.exact_roots: List[Fraction] = []

    def sign(self, y: Fraction) -> int:
        if y not in self.signs:
            self.signs[y] = sign_on_fiber(self.poly, self.x, y)
        return self.signs[y]

    def enclosures(self, a: Fraction, b: Fraction):
        width = min(b - a, self.x.width) if self.x.width > 0 else b - a
        ctx = interval_context(precision_for(width, 8 * max(self.poly.total_degree, 1)))
        boxes = [self.x.enclosure(ctx), rational_interval(ctx, a, b), None]
        value = evaluate_terms(ctx, self.poly.terms(), boxes)
        slope = evaluate_terms(ctx, self.derivative.terms(), boxes)
        return certain_sign(value), certain_sign(slope)

    def split_point(self, a: Fraction, b: Fraction) -> Fraction:
        """A point strictly inside (a, b) where the fiber does not vanish"""
        step = b - a
        for k in range(1, 64):
            candidate = a + step / 2 + step / 2 ** (k + 1) if k > 1 else a + step / 2
            if self.sign(candidate) != 0:
                return candidate
            if candidate not in self.exact_roots and not _equals_exclusion(
                candidate, self.exclude, self.x
            ):
                self.exact_roots.append(candidate)
        raise InvariantBreach("no regular split point found")


def isolate_fiber_roots(
    poly: MPoly,
    x: AlgebraicNumber,
    target: int,
    exclude: Optional[RealValue] = None,
) -> List[Value]:
    """
    The simple real roots of poly(x, X2) other than a known special root

    Args:
        poly: bivariate polynomial regular in x2
        x: irrational abscissa
        target: number of roots to find (distinct real roots minus the special one)
        exclude: the special root, never reported

    Returns:
        FiberRoot values, with Fractions for roots met exactly, unsorted

    Raises:
        InvariantBreach: the roots cannot be isolated within the refinement limit
    """
    if target <= 0:
        return []
    if poly.degree(1) == 1:
        coefficients = poly.coefficients_in(1)
        return [CriticalOrdinate(-coefficients[0], coefficients[1], (x,))]

    work = _Subdivision(poly, x, exclude)
    bound = _cauchy_bound(poly, x)
    pending: List[Tuple[Fraction, Fraction]] = [(-bound, bound)]
    certified: List[Tuple[Fraction, Fraction]] = []

    for _ in range(algebraic.REFINEMENT_LIMIT):
        if len(certified) + len(work.exact_roots) >= target or not pending:
            break
        finest = min(b - a for a, b in pending)
        while not x.is_rational and x.width > finest / 16:
            x.refine()
        if exclude is not None and any(_overlaps(a, b, exclude) for a, b in pending):
            exclude.refine()
        queue: List[Tuple[Fraction, Fraction]] = []
        for a, b in pending:
            if exclude is not None and _overlaps(a, b, exclude):
                mid = work.split_point(a, b)
                queue += [(a, mid), (mid, b)]
                continue
            value_sign, slope_sign = work.enclosures(a, b)
            if value_sign is not None:
                continue
            if slope_sign is not None:
                if work.sign(a) * work.sign(b) < 0:
                    if not any(a < r < b for r in work.exact_roots):
                        certified.append((a, b))
                continue
            mid = work.split_point(a, b)
            queue += [(a, mid), (mid, b)]
        pending = queue

    found = len(certified) + len(work.exact_roots)
    if found != target:
        raise InvariantBreach(f"isolated {found} fiber roots, expected {target}")
    roots: List[Value] = [FiberRoot(poly, x, a, b) for a, b in certified]
    roots += list(work.exact_roots)
    logger.debug(f"Isolated {found} fiber roots of {poly.to_text()}")
    return roots
