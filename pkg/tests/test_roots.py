"""
Tests for real root isolation, exact signs, comparisons and sample points
"""

from fractions import Fraction

import pytest

from src.arith.polynomial import MPoly, UPoly
from src.core.errors import ZeroPolynomialError
from src.roots import (
    AlgebraicNumber,
    compare,
    count_real_roots,
    isolate_real_roots,
    sample_between,
    sign_at,
)
from src.roots.fiber import count_real_roots_in_fiber, fiber_roots_at_rational

pytestmark = pytest.mark.unit

X1 = MPoly.variable("x1")
X2 = MPoly.variable("x2")


def sqrt2_roots():
    return isolate_real_roots(UPoly([-2, 0, 1]))


class TestIsolation:
    """Test real root isolation"""

    def test_rational_roots_are_exact(self):
        """Test x^2 - 1 yields the exact roots -1 and 1"""
        roots = isolate_real_roots(UPoly([-1, 0, 1]))
        assert [r.is_rational for r in roots] == [True, True]
        assert [r.rational_value for r in roots] == [-1, 1]

    def test_irrational_roots_disjoint(self):
        """Test the two roots of x^2 - 2 have disjoint increasing intervals"""
        low, high = sqrt2_roots()
        assert not low.is_rational
        assert low.hi < high.lo
        assert low.lo <= Fraction(-141, 100) and high.hi >= Fraction(141, 100)

    def test_repeated_roots(self):
        """Test (x-1)^2 (x+2) has two distinct roots"""
        roots = isolate_real_roots(UPoly([2, -3, 0, 1]))
        assert [r.rational_value for r in roots] == [-2, 1]

    def test_no_real_roots(self):
        """Test x^2 + 1 has none"""
        assert isolate_real_roots(UPoly([1, 0, 1])) == []

    def test_zero_polynomial(self):
        """Test the zero polynomial is refused"""
        with pytest.raises(ZeroPolynomialError):
            isolate_real_roots(UPoly([]))

    def test_count_from_mpoly(self):
        """Test a univariate MPoly is accepted"""
        assert count_real_roots(X1 ** 3 - X1) == 3

    def test_refine_to_width(self):
        """Test refinement shrinks the interval below the requested width"""
        _, root = sqrt2_roots()
        root.refine_to(Fraction(1, 1000))
        assert root.width <= Fraction(1, 1000)
        assert root.lo ** 2 < 2 < root.hi ** 2


class TestSignsAndComparison:
    """Test exact signs and comparisons at algebraic numbers"""

    def test_sign_zero_certified(self):
        """Test x^2 - 2 vanishes at sqrt(2)"""
        _, root = sqrt2_roots()
        assert sign_at(UPoly([-2, 0, 1]), root) == 0

    def test_sign_nonzero(self):
        """Test x - 1 is positive at sqrt(2) and x + 1 negative at -sqrt(2)"""
        low, high = sqrt2_roots()
        assert sign_at(UPoly([-1, 1]), high) == 1
        assert sign_at(UPoly([1, 1]), low) == -1

    def test_sign_at_rational(self):
        """Test a rational point is evaluated directly"""
        assert sign_at(UPoly([-1, 0, 1]), Fraction(1, 2)) == -1

    def test_compare_with_rational(self):
        """Test sqrt(2) against 3/2 and 7/5"""
        _, root = sqrt2_roots()
        assert compare(root, Fraction(3, 2)) == -1
        assert compare(root, Fraction(7, 5)) == 1

    def test_compare_equal_numbers(self):
        """Test sqrt(2) from x^2 - 2 equals sqrt(2) from x^4 - 4"""
        _, a = sqrt2_roots()
        _, b = isolate_real_roots(UPoly([-4, 0, 0, 0, 1]))
        assert compare(a, b) == 0

    def test_compare_rationals(self):
        """Test degenerate intervals compare by value"""
        a = AlgebraicNumber.from_rational(Fraction(1, 3))
        assert compare(a, Fraction(1, 3)) == 0
        assert compare(a, Fraction(1, 2)) == -1


class TestSampleBetween:
    """Test sample points between sorted roots"""

    def test_unit_roots(self):
        """Test the roots -1 and 1 give the samples -2, 0, 2"""
        roots = isolate_real_roots(UPoly([-1, 0, 1]))
        assert sample_between(roots) == [-2, 0, 2]

    def test_single_irrational_root(self):
        """Test sqrt(2) alone gives the samples 1 and 2"""
        _, root = sqrt2_roots()
        assert sample_between([root]) == [1, 2]

    def test_no_roots(self):
        """Test an empty root list gives the single sample 0"""
        assert sample_between([]) == [0]

    def test_irrational_roots_separated(self):
        """Test samples lie strictly between the roots of x^2 - 2"""
        low, high = sqrt2_roots()
        samples = sample_between([low, high])
        assert len(samples) == 3
        assert compare(low, samples[0]) == 1
        assert compare(low, samples[1]) == -1
        assert compare(high, samples[1]) == 1
        assert compare(high, samples[2]) == -1


class TestFiberRoots:
    """Test root counting on vertical lines"""

    def test_circle_fibers_at_rationals(self):
        """Test the unit circle meets x1 = 1/2, 1, 2 in 2, 1, 0 points"""
        circle = X1 ** 2 + X2 ** 2 - 1
        assert count_real_roots_in_fiber(circle, Fraction(1, 2)) == 2
        assert count_real_roots_in_fiber(circle, Fraction(1)) == 1
        assert count_real_roots_in_fiber(circle, Fraction(2)) == 0

    def test_circle_fiber_at_algebraic(self):
        """Test x1 = sqrt(1/2) meets the circle twice"""
        circle = X1 ** 2 + X2 ** 2 - 1
        _, x = isolate_real_roots(UPoly([-1, 0, 2]), var="x1")
        assert count_real_roots_in_fiber(circle, x) == 2

    def test_fiber_roots_exact(self):
        """Test the roots above x1 = 0 are -1 and 1"""
        circle = X1 ** 2 + X2 ** 2 - 1
        roots = fiber_roots_at_rational(circle, 0)
        assert [r.rational_value for r in roots] == [-1, 1]

    def test_cubic_fibers(self):
        """Test x2^2 - x1^3 + x1 has two points above (-1, 0) and none above (0, 1)"""
        cubic = X2 ** 2 - X1 ** 3 + X1
        assert count_real_roots_in_fiber(cubic, Fraction(-1, 2)) == 2
        assert count_real_roots_in_fiber(cubic, Fraction(1, 2)) == 0
        low, high = isolate_real_roots(UPoly([-1, 0, 2]), var="x1")
        assert count_real_roots_in_fiber(cubic, low) == 2
        assert count_real_roots_in_fiber(cubic, high) == 0
