"""
Plane Points
Points of the plane with exactly decidable polynomial signs
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from src.arith.polynomial import MPoly
from src.roots.algebraic import AlgebraicNumber, sign_at
from src.roots.fiber import FiberRoot
from src.roots.values import CriticalOrdinate, Value, exact_of, sign_nonzero
from src.topology.shear import unshear


def _sign(value) -> int:
    return (value > 0) - (value < 0)


@dataclass
class PlanePoint:
    """
    A point (x, y) in the frame sheared by ``shear``

    x is a real algebraic number; y is a rational, an algebraic number in x2 (above rational
    abscissas), a critical ordinate N(x)/D(x) or a fiber root. ``origin`` tags the curves or
    ladder that produced it.
    """
    x: AlgebraicNumber
    y: Value
    shear: int = 0
    origin: Tuple[str, ...] = field(default_factory=tuple)

    def sign(self, poly: MPoly) -> int:
        """
        Exact sign of a bivariate polynomial at the point

        Critical ordinates are handled by clearing the denominator, which reduces the test to
        a univariate sign at x. For fiber roots, poly must vanish at the point only if the
        fiber's curve divides it (true for every polynomial whose factors belong to the
        arrangement the point came from).
        """
        if poly.is_constant:
            return _sign(poly.constant_value())
        if self.x.is_rational:
            fiber = poly.evaluate({0: self.x.lo})
            known = exact_of(self.y)
            if known is not None:
                return _sign(fiber.evaluate({1: known}).constant_value())
            if isinstance(self.y, AlgebraicNumber):
                return sign_at(fiber, self.y)
            return sign_nonzero(poly, (self.x, self.y))
        known = exact_of(self.y)
        if known is not None:
            return sign_at(poly.evaluate({1: known}), self.x)
        if isinstance(self.y, CriticalOrdinate) and len(self.y.point) == 1:
            return self._sign_at_ratio(poly, self.y)
        if isinstance(self.y, FiberRoot):
            if self.y.curve.divides(poly):
                return 0
            return sign_nonzero(poly, (self.x, self.y))
        return sign_nonzero(poly, (self.x, self.y))

    def _sign_at_ratio(self, poly: MPoly, y: CriticalOrdinate) -> int:
        coefficients = poly.coefficients_in(1)
        d = len(coefficients) - 1
        cleared = MPoly.zero()
        for i, f in enumerate(coefficients):
            if not f.is_zero:
                cleared = cleared + f * y.num ** i * y.den ** (d - i)
        s = sign_at(cleared, self.x)
        if d % 2 == 1:
            s *= sign_at(y.den, self.x)
        return s

    def on(self, poly: MPoly) -> bool:
        return self.sign(poly) == 0

    def original(self) -> Tuple[Value, Value]:
        """Coordinates in the unsheared frame"""
        return unshear(self.x, self.y, self.shear)

    def exact(self) -> Optional[Tuple[Fraction, Fraction]]:
        x = exact_of(self.x)
        y = exact_of(self.y)
        if x is None or y is None:
            return None
        return x + self.shear * y, y
