"""
Tests for Sylvester-Habicht matrices, resultants and signed subresultant ladders
"""

from fractions import Fraction

import numpy as np
import pytest

from src.arith.polynomial import MPoly, UPoly, polynomial_gcd
from src.core.errors import CommonFactorError, DegreeError
from src.roots import isolate_real_roots
from src.subresultants import (
    count_distinct_real_roots,
    gcd_degree_at,
    permanences_minus_variations,
    resultant,
    shared_root_y,
    signed_subresultants,
    sylvester_habicht,
)

pytestmark = pytest.mark.unit

X1 = MPoly.variable("x1")
X2 = MPoly.variable("x2")


class TestSylvesterHabicht:
    """Test the matrix shapes and rows"""

    def test_shapes(self):
        """Test SyHa_j is (p+q-2j) x (p+q-j)"""
        p = UPoly([-1, 0, 1])
        q = UPoly([0, 2])
        assert sylvester_habicht(p, q, 0).shape == (3, 3)
        assert sylvester_habicht(p, q, 1).shape == (1, 2)

    def test_rows(self):
        """Test the P rows come first, then Q, XQ, ..."""
        m = sylvester_habicht(UPoly([-1, 0, 1]), UPoly([0, 2]), 0)
        assert m.rows() == [[1, 0, -1], [0, 2, 0], [2, 0, 0]]

    def test_index_out_of_range(self):
        """Test j above deg Q is refused"""
        with pytest.raises(DegreeError):
            sylvester_habicht(UPoly([-1, 0, 1]), UPoly([0, 2]), 2)

    def test_degree_order(self):
        """Test deg Q > deg P is refused"""
        with pytest.raises(DegreeError):
            sylvester_habicht(UPoly([0, 2]), UPoly([-1, 0, 1]), 0)


class TestResultant:
    """Test resultants as det SyHa_0"""

    def test_circle_discriminant(self):
        """Test Res(x1^2 + x2^2 - 1, 2 x2) is proportional to x1^2 - 1"""
        res = resultant(X1 ** 2 + X2 ** 2 - 1, 2 * X2, "x2")
        assert res.raw == -4 * (X1 ** 2 - 1)
        assert res.canonical == X1 ** 2 - 1

    def test_constant_degree(self):
        """Test a polynomial free of the variable is refused"""
        with pytest.raises(DegreeError):
            resultant(X1 + 1, X2, "x2")


class TestSignedSubresultants:
    """Test the ladder, gcd degrees and real root counting"""

    def test_ladder_of_parabola(self):
        """Test sRes_1 = 2 and sRes_0 = 4 x1 for (x2^2 - x1, 2 x2)"""
        p = X2 ** 2 - X1
        seq = signed_subresultants(p, p.derivative(1), 1)
        assert seq.principal(1) == MPoly.constant(2)
        assert seq.resultant == 4 * X1
        assert seq.principal(2).is_zero

    def test_count_distinct_real_roots(self):
        """Test x2^2 - x1 has 2, 1 and 0 real roots at x1 = 4, 0, -1"""
        p = X2 ** 2 - X1
        seq = signed_subresultants(p, p.derivative(1), 1)
        assert count_distinct_real_roots(seq, Fraction(4)) == 2
        assert count_distinct_real_roots(seq, Fraction(0)) == 1
        assert count_distinct_real_roots(seq, Fraction(-1)) == 0

    def test_gcd_degree(self):
        """Test the gcd degree jumps where the resultant vanishes"""
        p = X2 ** 2 - X1
        seq = signed_subresultants(p, p.derivative(1), 1)
        assert gcd_degree_at(seq, Fraction(0)) == 1
        assert gcd_degree_at(seq, Fraction(3)) == 0

    def test_equal_degrees_replace_second(self):
        """Test equal degrees reduce the second polynomial"""
        p = X2 ** 2 + X1 ** 2 - 1
        q = X2 ** 2 + (X1 - 1) ** 2 - 1
        seq = signed_subresultants(p, q, 1)
        assert seq.replaced
        assert seq.deg_q < seq.deg_p

    def test_proportional_pair(self):
        """Test proportional inputs have no ladder"""
        p = X2 ** 2 - X1
        with pytest.raises(CommonFactorError):
            signed_subresultants(p, 3 * p, 1)

    def test_constant_input(self):
        """Test an input free of the variable is refused"""
        with pytest.raises(DegreeError):
            signed_subresultants(X1, X2, 1)


class TestPermanencesMinusVariations:
    """Test PmV of sign sequences"""

    def test_all_positive(self):
        """Test every permanence counts one"""
        assert permanences_minus_variations([1, 1, 1]) == 2

    def test_variation(self):
        """Test a sign change counts minus one"""
        assert permanences_minus_variations([1, 1, -1]) == 0

    def test_trailing_zeros_dropped(self):
        """Test trailing zeros do not count"""
        assert permanences_minus_variations([1, 1, 0, 0]) == 1

    def test_even_gap_ignored(self):
        """Test nonzero entries two apart contribute nothing"""
        assert permanences_minus_variations([1, 0, 1]) == 0

    def test_gap_of_three(self):
        """Test a gap of three has sign epsilon = -1"""
        assert permanences_minus_variations([1, 0, 0, 1]) == -1


class TestSharedRoots:
    """Test gcd degrees and common roots of specialized pairs"""

    def test_circle_tangent_at_one(self):
        """Test the circle and its x2-derivative share y = 0 above x1 = 1"""
        circle = X1 ** 2 + X2 ** 2 - 1
        seq = signed_subresultants(circle, circle.derivative(1), 1)
        assert gcd_degree_at(seq, Fraction(1)) == 1
        assert shared_root_y(seq, 1, Fraction(1)).exact() == 0

    def test_coprime_specialization(self):
        """Test the circle and the line x2 = 1 share nothing above x1 = 1/2"""
        seq = signed_subresultants(X1 ** 2 + X2 ** 2 - 1, X2 - 1, 1)
        assert gcd_degree_at(seq, Fraction(1, 2)) == 0
        with pytest.raises(DegreeError):
            shared_root_y(seq, 0, Fraction(1, 2))

    def test_tangent_line(self):
        """Test the line x2 = 1 touches the circle at (0, 1)"""
        seq = signed_subresultants(X1 ** 2 + X2 ** 2 - 1, X2 - 1, 1)
        assert gcd_degree_at(seq, Fraction(0)) == 1
        assert shared_root_y(seq, 1, Fraction(0)).exact() == 1

    def test_algebraic_abscissa(self):
        """Test the circle and the diagonal meet at y = sqrt(1/2) above x1 = sqrt(1/2)"""
        seq = signed_subresultants(X1 ** 2 + X2 ** 2 - 1, X2 - X1, 1)
        _, x = isolate_real_roots(UPoly([-1, 0, 2]), var="x1")
        x.refine_to(Fraction(1, 1000))
        assert gcd_degree_at(seq, x) == 1
        y = shared_root_y(seq, 1, x)
        assert y.exact() is None
        lo, hi = y.bounds()
        assert lo <= Fraction(70711, 100000)
        assert hi >= Fraction(70710, 100000)
        assert hi - lo < Fraction(1, 2)

    def test_quad2_silhouette_and_g(self):
        """Test Sil(P1) and G-tilde of quad2 meet at y = -sqrt(3)/2 above x1 = (1 - sqrt(3))/2"""
        sil = X1 ** 2 - 2 * X1 * X2 + 2 * X2 ** 2 - 1
        g = 2 * X2 - 2 * X1 + 1
        seq = signed_subresultants(sil, g, 1)
        x, _ = isolate_real_roots(UPoly([-1, -2, 2]), var="x1")
        x.refine_to(Fraction(1, 10 ** 6))
        assert gcd_degree_at(seq, x) == 1
        lo, hi = shared_root_y(seq, 1, x).bounds()
        assert lo <= Fraction(-866025, 10 ** 6)
        assert hi >= Fraction(-866026, 10 ** 6)
        assert hi - lo < Fraction(1, 1000)


def x2_polynomial(rng, degree):
    coefficients = [int(c) for c in rng.integers(-5, 6, size=degree + 1)]
    if coefficients[-1] == 0:
        coefficients[-1] = 1
    poly = MPoly.constant(coefficients[0])
    for k, c in enumerate(coefficients[1:], start=1):
        poly = poly + c * X2 ** k
    return poly


def random_pair(seed):
    rng = np.random.default_rng(seed)
    p = x2_polynomial(rng, int(rng.integers(2, 6)))
    q = x2_polynomial(rng, int(rng.integers(1, p.degree(1))))
    if seed % 4 == 1:
        factor = X2 - int(rng.integers(-3, 4))
        p, q = p * factor, q * factor
    elif seed % 4 == 3:
        factor = X2 ** 2 + 1
        p, q = p * factor, q * factor
    return p, q


def random_univariate(seed, max_degree):
    rng = np.random.default_rng(seed)
    poly = x2_polynomial(rng, int(rng.integers(2, max_degree - 1)))
    if seed % 3 == 0:
        poly = poly * (X2 - int(rng.integers(-2, 3))) ** 2
    return poly


def assert_resultant_detects_gcd(seed):
    p, q = random_pair(seed)
    common = polynomial_gcd(p, q)
    assert resultant(p, q, "x2").raw.is_zero == (common.degree(1) > 0)


def assert_counts_agree(seed, max_degree):
    poly = random_univariate(seed, max_degree)
    seq = signed_subresultants(poly, poly.derivative(1), 1)
    isolated = isolate_real_roots(poly, var="x2")
    assert count_distinct_real_roots(seq, Fraction(0)) == len(isolated)


class TestRandomPairs:
    """Test resultants and Sturm-Habicht counts on random univariate polynomials"""

    @pytest.mark.parametrize("seed", range(40))
    def test_resultant_zero_iff_common_factor(self, seed):
        """Test the resultant vanishes exactly when the gcd is nontrivial"""
        assert_resultant_detects_gcd(seed)

    @pytest.mark.parametrize("seed", range(30))
    def test_sturm_habicht_count(self, seed):
        """Test the Sturm-Habicht count equals the number of isolated roots"""
        assert_counts_agree(seed, 8)


@pytest.mark.slow
class TestRandomPairsLong:
    """Test the same properties on 500 inputs each, degrees up to 12"""

    @pytest.mark.parametrize("seed", range(500))
    def test_resultant_zero_iff_common_factor(self, seed):
        """Test the resultant vanishes exactly when the gcd is nontrivial"""
        assert_resultant_detects_gcd(1000 + seed)

    @pytest.mark.parametrize("seed", range(500))
    def test_sturm_habicht_count(self, seed):
        """Test the Sturm-Habicht count equals the number of isolated roots"""
        assert_counts_agree(1000 + seed, 12)
