"""
Exact Real Values
Numbers defined from real algebraic coordinates: rational functions, quadratic roots and linear
combinations, each carrying shrinking rational bounds
"""

from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence, Tuple, Union

from src.arith.polynomial import MPoly
from src.core.errors import InvariantBreach
from src.roots import algebraic
from src.roots.algebraic import AlgebraicNumber
from src.roots.intervals import (
    certain_sign,
    evaluate_terms,
    fraction_bounds,
    interval_context,
    nonnegative_part,
    precision_for,
    rational_interval,
)

Value = Union[Fraction, int, "RealValue", AlgebraicNumber]


class RealValue:
    """
    Interface shared by every lazily refined real value

    ``bounds()`` returns rational lo <= hi enclosing the value; ``refine()`` shrinks them;
    ``exact()`` returns the value when it is known to be rational.
    """

    def bounds(self) -> Tuple[Fraction, Fraction]:
        raise NotImplementedError

    def refine(self) -> None:
        raise NotImplementedError

    def exact(self) -> Optional[Fraction]:
        return None


def exact_of(value: Value) -> Optional[Fraction]:
    """The rational value when known, otherwise None"""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, AlgebraicNumber):
        return value.lo if value.is_rational else None
    return value.exact()


def bounds_of(value: Value) -> Tuple[Fraction, Fraction]:
    if isinstance(value, (int, Fraction)):
        return Fraction(value), Fraction(value)
    return value.bounds()


def refine_value(value: Value) -> None:
    if isinstance(value, (int, Fraction)):
        return
    value.refine()


def width_of_value(value: Value) -> Fraction:
    lo, hi = bounds_of(value)
    return hi - lo


def box_of(ctx, value: Value):
    lo, hi = bounds_of(value)
    return rational_interval(ctx, lo, hi)


def compare_distinct(u: Value, v: Value) -> int:
    """
    Order of two values known to be different, by refining until their bounds separate

    Returns:
        -1 if u < v, +1 if u > v

    Raises:
        InvariantBreach: when the values cannot be separated (they are probably equal)
    """
    for _ in range(algebraic.REFINEMENT_LIMIT):
        u_lo, u_hi = bounds_of(u)
        v_lo, v_hi = bounds_of(v)
        if u_hi < v_lo:
            return -1
        if v_hi < u_lo:
            return 1
        eu, ev = exact_of(u), exact_of(v)
        if eu is not None and ev is not None:
            if eu == ev:
                break
            return -1 if eu < ev else 1
        if eu is None and (ev is not None or u_hi - u_lo >= v_hi - v_lo):
            refine_value(u)
        else:
            refine_value(v)
    raise InvariantBreach("values expected to differ could not be separated")


def _point_precision(point: Sequence[Value], extra: int) -> int:
    widths = [width_of_value(v) for v in point]
    positive = [w for w in widths if w > 0]
    return precision_for(min(positive) if positive else Fraction(0), extra)


def enclose(poly: MPoly, point: Sequence[Value], extra: int = 0):
    """Interval enclosure of poly at a point given by its first len(point) coordinates"""
    ctx = interval_context(_point_precision(point, extra + 8 * max(poly.total_degree, 1)))
    boxes = [box_of(ctx, v) for v in point] + [None] * (3 - len(point))
    return ctx, evaluate_terms(ctx, poly.terms(), boxes)


def exact_point(point: Sequence[Value]) -> Optional[Tuple[Fraction, ...]]:
    values = tuple(exact_of(v) for v in point)
    if any(v is None for v in values):
        return None
    return values


def evaluate_exact(poly: MPoly, point: Sequence[Fraction]) -> Fraction:
    assignment = {i: v for i, v in enumerate(point)}
    return poly.evaluate(assignment).constant_value()


def refine_point(point: Sequence[Value]) -> None:
    for v in point:
        if exact_of(v) is None:
            refine_value(v)


def sign_nonzero(poly: MPoly, point: Sequence[Value]) -> int:
    """
    Sign of a polynomial known not to vanish at the point

    Raises:
        InvariantBreach: when the enclosure keeps containing zero
    """
    exact = exact_point(point)
    if exact is not None:
        value = evaluate_exact(poly, exact)
        if value == 0:
            raise InvariantBreach(f"{poly.to_text()} vanishes at a point assumed generic")
        return 1 if value > 0 else -1
    for _ in range(algebraic.REFINEMENT_LIMIT):
        _, value = enclose(poly, point)
        s = certain_sign(value)
        if s is not None:
            return s
        refine_point(point)
    raise InvariantBreach(f"sign of {poly.to_text()} undecided after the refinement limit")


class CriticalOrdinate(RealValue):
    """
    The value num(p) / den(p) at a point p of lower dimension

    Used for the coordinate of the unique common root of two polynomials above a point,
    -sRes_{j,j-1}(p) / (j sRes_j(p)).
    """

    def __init__(self, num: MPoly, den: MPoly, point: Sequence[Value]):
        self.num = num
        self.den = den
        self.point = tuple(point)
        self._exact: Optional[Fraction] = None
        self._bounds: Optional[Tuple[Fraction, Fraction]] = None
        exact = exact_point(self.point)
        if exact is not None:
            d = evaluate_exact(den, exact)
            if d == 0:
                raise InvariantBreach("zero denominator in a critical ordinate")
            self._exact = evaluate_exact(num, exact) / d

    def exact(self) -> Optional[Fraction]:
        return self._exact

    def bounds(self) -> Tuple[Fraction, Fraction]:
        if self._exact is not None:
            return self._exact, self._exact
        if self._bounds is None:
            self._bounds = self._compute_bounds()
        return self._bounds

    def _compute_bounds(self) -> Tuple[Fraction, Fraction]:
        for _ in range(algebraic.REFINEMENT_LIMIT):
            ctx, den = enclose(self.den, self.point)
            if certain_sign(den) is not None:
                _, num = enclose(self.num, self.point)
                bounds = fraction_bounds(num / den)
                if bounds is not None:
                    return bounds
            refine_point(self.point)
        raise InvariantBreach("denominator of a critical ordinate does not separate from zero")

    def refine(self) -> None:
        if self._exact is not None:
            return
        refine_point(self.point)
        self._bounds = None
        exact = exact_point(self.point)
        if exact is not None:
            self._exact = evaluate_exact(self.num, exact) / evaluate_exact(self.den, exact)

    def __repr__(self) -> str:
        return f"CriticalOrdinate(({self.num.to_text()}) / ({self.den.to_text()}))"


class QuadraticRoot(RealValue):
    """
    A root (-b + sigma sqrt(D)) / (2a) of a quadratic with constant leading coefficient a

    ``sigma`` is the sign of 2az + b at the root: -1 lower root, +1 upper root, 0 double root.
    b and D are polynomials evaluated at a point of lower dimension.
    """

    def __init__(self, a: Fraction, b: MPoly, disc: MPoly, sigma: int, point: Sequence[Value]):
        self.a = Fraction(a)
        self.b = b
        self.disc = disc
        self.sigma = sigma
        self.point = tuple(point)
        self._extra = 0
        self._exact: Optional[Fraction] = None
        exact = exact_point(self.point)
        if exact is not None:
            b_value = evaluate_exact(b, exact)
            if sigma == 0:
                self._exact = -b_value / (2 * self.a)
            else:
                root = _rational_sqrt(evaluate_exact(disc, exact))
                if root is not None:
                    self._exact = (-b_value + sigma * root) / (2 * self.a)
        elif b.is_constant:
            # roots independent of the point
            b_value = b.constant_value()
            if sigma == 0:
                self._exact = -b_value / (2 * self.a)
            elif disc.is_constant:
                root = _rational_sqrt(disc.constant_value())
                if root is not None:
                    self._exact = (-b_value + sigma * root) / (2 * self.a)

    def exact(self) -> Optional[Fraction]:
        return self._exact

    def bounds(self) -> Tuple[Fraction, Fraction]:
        if self._exact is not None:
            return self._exact, self._exact
        ctx, b_value = enclose(self.b, self.point, self._extra)
        if self.sigma == 0:
            value = -b_value / (2 * rational_interval(ctx, self.a, self.a))
        else:
            _, d_value = enclose(self.disc, self.point, self._extra)
            root = ctx.sqrt(nonnegative_part(ctx, d_value))
            value = (-b_value + self.sigma * root) / (2 * rational_interval(ctx, self.a, self.a))
        bounds = fraction_bounds(value)
        if bounds is None:
            raise InvariantBreach("unbounded enclosure of a quadratic root")
        return bounds

    def refine(self) -> None:
        if self._exact is not None:
            return
        refine_point(self.point)
        self._extra += 8

    def __repr__(self) -> str:
        return f"QuadraticRoot(sigma={self.sigma})"


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    n, d = value.numerator, value.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class LinearValue(RealValue):
    """A rational linear combination of values"""

    def __init__(self, terms: Sequence[Tuple[Fraction, Value]]):
        self.terms = tuple((Fraction(c), v) for c, v in terms if c != 0)

    def exact(self) -> Optional[Fraction]:
        total = Fraction(0)
        for c, v in self.terms:
            e = exact_of(v)
            if e is None:
                return None
            total += c * e
        return total

    def bounds(self) -> Tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        for c, v in self.terms:
            v_lo, v_hi = bounds_of(v)
            if c > 0:
                lo, hi = lo + c * v_lo, hi + c * v_hi
            else:
                lo, hi = lo + c * v_hi, hi + c * v_lo
        return lo, hi

    def refine(self) -> None:
        for _, v in self.terms:
            if exact_of(v) is None:
                refine_value(v)

    def __repr__(self) -> str:
        return f"LinearValue({len(self.terms)} terms)"
