"""
Tests for the three-quadric intersection pipeline
"""

from fractions import Fraction

import pytest

from src.arith.parser import poly_parse
from src.arith.polynomial import MPoly
from src.core.catalog import QUADRIC_TRIPLES
from src.core.errors import RefusedInputError
from src.quadrics.engine import intersect_three_quadrics
from src.quadrics.lifting import lift_point
from src.quadrics.prepare import prepare, regularize
from src.quadrics.projection import project
from src.roots.algebraic import as_algebraic
from src.roots.intervals import certain_sign
from src.roots.values import enclose, evaluate_exact, exact_of, refine_point
from src.topology.points import PlanePoint
from src.utils.formatting import to_decimal

X1 = MPoly.variable("x1")
X2 = MPoly.variable("x2")
X3 = MPoly.variable("x3")


def triple(name):
    return [poly_parse(text) for text in QUADRIC_TRIPLES[name]]


def decimals(point, precision=15):
    return [float(to_decimal(c, precision)) for c in point.coordinates]


def flat(points, precision=20):
    return sum(sorted(decimals(p, precision) for p in points), [])


@pytest.mark.unit
class TestPreparation:
    """Test input validation and X3-regularization"""

    def test_quad2_unchanged(self):
        """Test a triple with constant X3^2 coefficients keeps its frame"""
        prepared = prepare(*triple("quad2"))
        assert prepared.change.is_identity

    def test_degree_refused(self):
        """Test a plane is refused with classification "degree" """
        sphere = X1 ** 2 + X2 ** 2 + X3 ** 2 - 1
        with pytest.raises(RefusedInputError) as info:
            prepare(X1 + X2, sphere, sphere)
        assert info.value.classification == "degree"

    def test_single_plane_refused(self):
        """Test the square of a plane is refused"""
        sphere = X1 ** 2 + X2 ** 2 + X3 ** 2 - 1
        with pytest.raises(RefusedInputError) as info:
            prepare((X1 + X3) ** 2, sphere, sphere)
        assert info.value.classification == "single plane"

    def test_shared_plane_refused(self):
        """Test P1 and P2 with a common plane are refused"""
        sphere = X1 ** 2 + X2 ** 2 + X3 ** 2 - 1
        with pytest.raises(RefusedInputError) as info:
            prepare(X1 * (X2 + X3), X1 * (X3 - 1), sphere)
        assert info.value.classification == "shared plane"

    def test_shared_surface_refused(self):
        """Test proportional P1 and P3 are refused"""
        sphere = X1 ** 2 + X2 ** 2 + X3 ** 2 - 1
        other = X1 ** 2 + X2 ** 2 - X3
        with pytest.raises(RefusedInputError) as info:
            prepare(sphere, other, 2 * sphere)
        assert info.value.classification == "shared surface"

    def test_equal_p2_p3_accepted(self):
        """Test P2 and P3 may coincide"""
        polys = triple("quad7")
        prepared = prepare(*polys)
        assert len(prepared.polys) == 3

    def test_regularize_changes_frame(self):
        """Test a quadric without X3^2 term becomes X3-regular"""
        saddle = X1 * X2 + X3
        regular, change = regularize([saddle])
        assert not change.is_identity
        assert regular[0].degree("x3") == 2
        assert regular[0].is_regular_in(2)


@pytest.mark.unit
class TestLiftPoint:
    """Test lifting single planar points onto P1, filtered by P2 and P3"""

    def test_double_root(self):
        """Test a fiber (x3 - 1)^2 lifts to the single point z = 1"""
        p1 = X1 ** 2 + X2 ** 2 + (X3 - 1) ** 2
        sphere = X1 ** 2 + X2 ** 2 + X3 ** 2 - 1
        prepared = prepare(p1, sphere, sphere)
        points = lift_point(prepared, PlanePoint(as_algebraic(0, "x1"), Fraction(0)))
        assert [p.exact() for p in points] == [(0, 0, 1)]
        assert points[0].slot == 0

    def test_no_real_root(self):
        """Test a fiber x3^2 + 1 has no real lift"""
        p1 = X1 ** 2 + X2 ** 2 + X3 ** 2 + 1
        sphere = X1 ** 2 + X2 ** 2 + X3 ** 2 - 1
        prepared = prepare(p1, sphere, sphere)
        assert lift_point(prepared, PlanePoint(as_algebraic(0, "x1"), Fraction(0))) == []

    def test_point_off_second_quadric(self):
        """Test a root of P1 missing P2 is not lifted"""
        p1 = X1 ** 2 + X2 ** 2 + (X3 - 1) ** 2
        other = X1 ** 2 + X2 ** 2 + X3 ** 2 - 4
        prepared = prepare(p1, other, other)
        assert lift_point(prepared, PlanePoint(as_algebraic(0, "x1"), Fraction(0))) == []


@pytest.mark.integration
class TestProjection:
    """Test the projection curves"""

    def test_quad2_curves(self):
        """Test the silhouette, H2 and G-tilde of quad2"""
        projection = project(prepare(*triple("quad2")))
        assert projection.sil == X1 ** 2 - 2 * X1 * X2 + 2 * X2 ** 2 - 1
        assert projection.h2.is_constant
        assert projection.sil_tilde.is_constant
        assert projection.g_tilde == 2 * X2 - 2 * X1 + 1
        assert not projection.finite

    def test_quad6_silhouette_part(self):
        """Test quad6 puts X1^2 - X2^2 into the silhouette part"""
        projection = project(prepare(*triple("quad6")))
        assert projection.sil_tilde == (X1 ** 2 - X2 ** 2).canonical()
        assert projection.g_tilde.is_constant

    def test_dump_lines(self):
        """Test the dump names every curve once"""
        lines = project(prepare(*triple("quad2"))).dump_lines()
        assert [line.split(" = ")[0] for line in lines] == [
            "Sil(P1)", "cut(P1,P2)", "cut(P1,P3)", "G", "H2", "H3", "SilTilde", "GTilde",
        ]


@pytest.mark.integration
class TestIntersection:
    """Test intersections of the catalog triples"""

    def test_quad2_cycle(self):
        """Test quad2 is a single cycle through the two critical points"""
        result = intersect_three_quadrics(*triple("quad2"))
        graph = result.graph
        assert not result.isolated
        assert len(graph.vertices) == 4
        assert len(graph.edges) == 4
        assert graph.component_count == 1
        critical = sorted(decimals(v) for v in graph.vertices if v.kind == "critical")
        assert len(critical) == 2
        assert critical[0] == pytest.approx([-0.366025403784439, -0.866025403784439, 0],
                                            abs=1e-12)
        assert critical[1] == pytest.approx([1.366025403784439, 0.866025403784439, 0],
                                            abs=1e-12)

    def test_quad3_isolated_points(self):
        """Test quad3 has two isolated points in the plane z = 0"""
        result = intersect_three_quadrics(*triple("quad3"))
        assert result.graph.is_empty
        assert len(result.isolated) == 2
        points = sorted(decimals(p, 20) for p in result.isolated)
        assert points[0][0] == pytest.approx(0.06676451891748808143, abs=1e-12)
        assert points[1][0] == pytest.approx(0.4954772252006942431, abs=1e-12)
        assert all(abs(p[2]) < 1e-12 for p in points)

    def test_quad4_empty(self):
        """Test quad4 does not meet"""
        result = intersect_three_quadrics(*triple("quad4"))
        assert result.empty

    def test_quad5_point_and_curve(self):
        """Test quad5 has the isolated origin and an open curve"""
        result = intersect_three_quadrics(*triple("quad5"))
        assert [p.exact() for p in result.isolated] == [(0, 0, 0)]
        assert not result.graph.is_empty
        target = [1.91241422362700248, -1.06499480841233028, 0.184566441477332223]
        assert any(decimals(v, 20) == pytest.approx(target, abs=1e-12)
                   for v in result.graph.vertices)

    def test_quad6_crossing(self):
        """Test quad6 has a vertex of degree 4 exactly at the origin"""
        result = intersect_three_quadrics(*triple("quad6"))
        graph = result.graph
        origin = [n for n, v in enumerate(graph.vertices) if v.exact() == (0, 0, 0)]
        assert len(origin) == 1
        assert graph.degree(origin[0]) == 4

    def test_meta(self):
        """Test the diagnostics report the frame and finiteness"""
        result = intersect_three_quadrics(*triple("quad2"))
        meta = result.meta
        assert meta["finite"] is False
        assert meta["coordinate_change"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_quad1_two_points(self):
        """Test quad1 is two isolated points, given in the input frame"""
        result = intersect_three_quadrics(*triple("quad1"))
        assert result.graph.is_empty
        assert len(result.isolated) == 2
        points = sorted(decimals(p, 20) for p in result.isolated)
        assert points[0] == pytest.approx(
            [-0.274555491271642188545, 0.108279144699943127379, -0.0112483830195252876502],
            abs=1e-12)
        assert points[1] == pytest.approx(
            [-0.272132822658547142645, -0.198977892068866019996, 0.185929315832258573728],
            abs=1e-12)

    def test_exact_zero_heights(self):
        """Test points lifted from a double root with constant b keep an exact height"""
        quad3 = intersect_three_quadrics(*triple("quad3"))
        assert [exact_of(p.coordinates[2]) for p in quad3.isolated] == [0, 0]
        quad2 = intersect_three_quadrics(*triple("quad2"))
        critical = [v for v in quad2.graph.vertices if v.kind == "critical"]
        assert all(exact_of(v.coordinates[2]) == 0 for v in critical)

    def test_reflection_symmetry(self):
        """Test the reflection z -> -z of every equation negates the heights"""
        flip = [poly.substitute_linear("x3", -X3) for poly in triple("quad3")]
        reflected = intersect_three_quadrics(*flip)
        original = intersect_three_quadrics(*triple("quad3"))
        mirrored = [[x, y, -z] for x, y, z in sorted(decimals(p, 20) for p in original.isolated)]
        assert flat(reflected.isolated) == pytest.approx(sum(mirrored, []), abs=1e-15)

    def test_scaling_invariance(self):
        """Test multiplying each equation by a constant keeps the intersection"""
        p1, p2, p3 = triple("quad3")
        scaled = intersect_three_quadrics(3 * p1, -2 * p2, 5 * p3)
        original = intersect_three_quadrics(p1, p2, p3)
        assert flat(scaled.isolated) == pytest.approx(flat(original.isolated), abs=1e-15)


@pytest.mark.integration
class TestPointsOnQuadrics:
    """Test every emitted point lies on the three input quadrics"""

    @pytest.mark.parametrize("name", ["quad2", "quad3", "quad5", "quad6"])
    def test_equations_vanish(self, name):
        """Test exact points evaluate to zero and enclosures of the others keep containing zero"""
        polys = triple(name)
        result = intersect_three_quadrics(*polys)
        points = list(result.isolated) + list(result.graph.vertices)
        assert points
        for point in points:
            exact = point.exact()
            for poly in polys:
                if exact is not None:
                    assert evaluate_exact(poly, exact) == 0
                    continue
                for _ in range(3):
                    _, value = enclose(poly, point.coordinates)
                    assert certain_sign(value) is None
                    refine_point(point.coordinates)


@pytest.mark.slow
class TestIntersectionSlow:
    """Test the larger catalog triples"""

    def test_quad7_connected(self):
        """Test quad7 is one connected component"""
        result = intersect_three_quadrics(*triple("quad7"))
        assert result.graph.component_count == 1
