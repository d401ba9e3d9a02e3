"""
Tests for plane curve topology, shears, common points and planar graphs
"""

from fractions import Fraction

import pytest

from src.arith.polynomial import MPoly
from src.core.errors import DegreeError
from src.roots import compare
from src.topology import (
    common_points,
    is_generic_position,
    planar_graph,
    shear,
    top,
    top_with_respect_to,
)

X1 = MPoly.variable("x1")
X2 = MPoly.variable("x2")
X3 = MPoly.variable("x3")

CIRCLE = X1 ** 2 + X2 ** 2 - 1
CUBIC = X2 ** 2 - X1 ** 3 + X1
TWO_CIRCLES = CIRCLE * (X1 ** 2 + (X2 - 3) ** 2 - 1)


@pytest.mark.unit
class TestShear:
    """Test the plane shear P(X1 + t X2, X2)"""

    def test_shear_of_x1(self):
        """Test shear(X1, 1) = X1 + X2"""
        assert shear(X1, 1) == X1 + X2

    def test_shear_identity(self):
        """Test t = 0 leaves the polynomial alone"""
        assert shear(CUBIC, 0) == CUBIC

    def test_shear_inverse(self):
        """Test shearing by t then -t restores the polynomial"""
        assert shear(shear(CUBIC, 2), -2) == CUBIC

    def test_shear_preserves_degree(self):
        """Test total degree is unchanged"""
        assert shear(CUBIC, 3).total_degree == CUBIC.total_degree


@pytest.mark.unit
class TestGenericPosition:
    """Test the generic position verdicts"""

    def test_circle_is_generic(self):
        """Test the unit circle passes every clause"""
        assert is_generic_position(CIRCLE)

    def test_irregular_curve(self):
        """Test x1*x2 - 1 fails X2-regularity"""
        verdict = is_generic_position(X1 * X2 - 1)
        assert not verdict
        assert verdict.condition == "regularity"

    def test_two_critical_points_in_one_fiber(self):
        """Test stacked circles share their critical abscissas"""
        verdict = is_generic_position(TWO_CIRCLES)
        assert not verdict
        assert verdict.condition == "single-critical-point"


@pytest.mark.integration
class TestTop:
    """Test the TOP output"""

    def test_circle(self):
        """Test r = 2, m = (0, 2, 0) and n = (1, 1)"""
        result = top(CIRCLE)
        assert result.r == 2
        assert result.band_counts == [0, 2, 0]
        assert result.fiber_counts == [1, 1]
        assert result.critical_indices == [1, 1]
        assert result.shear == 0
        assert [x.rational_value for x in result.abscissas] == [-1, 1]

    def test_cubic(self):
        """Test x2^2 - x1^3 + x1 has abscissas -1, 0, 1 and m = (0, 2, 0, 2)"""
        result = top(CUBIC)
        assert result.r == 3
        assert [compare(x, v) for x, v in zip(result.abscissas, (-1, 0, 1))] == [0, 0, 0]
        assert result.band_counts == [0, 2, 0, 2]
        assert result.fiber_counts == [1, 1, 1]

    def test_square_free_part_used(self):
        """Test a squared circle has the topology of the circle"""
        assert top(CIRCLE ** 2).band_counts == [0, 2, 0]

    def test_shear_applied(self):
        """Test stacked circles are sheared into generic position"""
        result = top(TWO_CIRCLES)
        assert result.shear != 0
        assert result.r == 4
        assert result.band_counts == [0, 2, 0, 2, 0]
        assert result.fiber_counts == [1, 1, 1, 1]

    def test_constant_refused(self):
        """Test a constant has no topology"""
        with pytest.raises(DegreeError):
            top(MPoly.constant(3))

    def test_spatial_polynomial_refused(self):
        """Test a polynomial in x3 is not a plane curve"""
        with pytest.raises(ValueError):
            top(CIRCLE + X3)

    def test_relative_to_diagonal(self):
        """Test the diagonal adds two marked fibers to the circle"""
        result = top_with_respect_to(CIRCLE, X2 - X1)
        assert result.r == 4
        assert result.fiber_counts == [1, 2, 2, 1]
        assert len(result.marked) == 2


@pytest.mark.integration
class TestCommonPoints:
    """Test the real common points of two curves"""

    def test_circle_and_diagonal(self):
        """Test two points at x1 = -1/sqrt(2) and 1/sqrt(2)"""
        points = common_points(CIRCLE, X2 - X1)
        assert len(points) == 2
        assert compare(points[0].x, Fraction(-7, 10)) == -1
        assert compare(points[1].x, Fraction(7, 10)) == 1

    def test_concentric_circles(self):
        """Test circles of radius 1 and 2 do not meet"""
        assert common_points(CIRCLE, X1 ** 2 + X2 ** 2 - 4) == []

    def test_constant_curve(self):
        """Test a constant curve has no points"""
        assert common_points(CIRCLE, MPoly.constant(1)) == []


@pytest.mark.integration
class TestPlanarGraph:
    """Test the explicit graph of a topology"""

    def test_circle_graph(self):
        """Test the circle is a 4-cycle of two fiber points and two branches"""
        graph = planar_graph(top(CIRCLE))
        assert len(graph.vertices) == 4
        assert len(graph.edges) == 4
        assert graph.component_count == 1
        assert graph.euler_characteristic == 0
        assert all(graph.degree(v) == 2 for v in range(4))

    def test_cubic_graph(self):
        """Test the cubic has a closed oval and an unbounded branch"""
        graph = planar_graph(top(CUBIC))
        assert graph.component_count == 2

    def test_stacked_circles_graph(self):
        """Test two disjoint circles give two components"""
        graph = planar_graph(top(TWO_CIRCLES))
        assert graph.component_count == 2
        assert graph.euler_characteristic == 0

    def test_columns_sorted(self):
        """Test vertices are listed column by column"""
        graph = planar_graph(top(CIRCLE))
        columns = [v.column for v in graph.vertices]
        assert columns == sorted(columns)
        assert columns == [2, 3, 3, 4]


@pytest.mark.integration
class TestShearInvariance:
    """Test the graph of a curve keeps its topology when the plane is sheared first"""

    @pytest.mark.parametrize("curve", [CIRCLE, CUBIC, TWO_CIRCLES], ids=["circle", "cubic", "two"])
    @pytest.mark.parametrize("t", [1, -1, 2])
    def test_components_and_euler_characteristic(self, curve, t):
        """Test components and V - E match those of the unsheared curve"""
        reference = planar_graph(top(curve))
        sheared = planar_graph(top(shear(curve, t)))
        assert sheared.component_count == reference.component_count
        assert sheared.euler_characteristic == reference.euler_characteristic
