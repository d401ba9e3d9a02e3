"""
Tests for the Mayer-Vietoris matrices and Betti numbers of ellipsoid unions
"""

from fractions import Fraction

import pytest

from src.arith.parser import poly_parse
from src.cad import Relation, Signature, betti01, incidence, mv_matrices, rank, validate_object
from src.cad.objects import parse_object_line
from src.core.catalog import CATALOG, SURFACES
from src.core.errors import InvariantBreach


def arrangement(name):
    return [parse_object_line(line, i) for i, line in enumerate(CATALOG[name].lines)]


def spheres(name):
    return [validate_object(poly_parse(text), Relation.ZERO, i)
            for i, text in enumerate(SURFACES[name])]


@pytest.mark.unit
class TestMatrices:
    """Test A and B built from component counts"""

    def test_three_overlapping_objects(self):
        """Test three pairwise meeting objects with one common component"""
        pairs = {(0, 1): 1, (0, 2): 1, (1, 2): 1}
        triples = {(0, 1, 2): [(0, 0, 0)]}
        a, b, d0, d1 = mv_matrices(3, pairs, triples)
        assert a.rows() == [[-1, 1, 0], [-1, 0, 1], [0, -1, 1]]
        assert b.rows() == [[1, -1, 1]]
        assert (d0, d1) == (3, 3)
        assert rank(a) == 2
        assert rank(b) == 1

    def test_pair_with_two_components(self):
        """Test two objects meeting twice leave a loop: b1 = d1 - rank B - rank A = 1"""
        a, b, d0, d1 = mv_matrices(2, {(0, 1): 2}, {})
        assert a.shape == (1, 2)
        assert b.shape == (0, 2)
        assert d1 - rank(b) - rank(a) == 1

    def test_empty_pairs_skipped(self):
        """Test pairs without components have no row and no column"""
        a, b, _, d1 = mv_matrices(3, {(0, 1): 1, (0, 2): 0}, {})
        assert a.shape == (1, 3)
        assert d1 == 1

    def test_column_offsets(self):
        """Test B columns follow the pairs in lexicographic order"""
        pairs = {(0, 1): 2, (0, 2): 1, (1, 2): 1}
        _, b, _, d1 = mv_matrices(3, pairs, {(0, 1, 2): [(1, 0, 0)]})
        assert d1 == 4
        assert b.rows() == [[0, 1, -1, 1]]


@pytest.mark.unit
class TestIncidence:
    """Test matching triple components to pair components"""

    def test_matching_signatures(self):
        """Test each triple component is located in its three pairs"""
        left, right = Signature(Fraction(-1), 0), Signature(Fraction(2), 0)
        pairs = {(0, 1): [left, right], (0, 2): [right], (1, 2): [left, right]}
        triples = {(0, 1, 2): [(right, right, left)]}
        assert incidence(triples, pairs) == {(0, 1, 2): [(1, 0, 0)]}

    def test_orphan_component(self):
        """Test a triple component outside every pair component is a breach"""
        known = Signature(Fraction(0), 0)
        pairs = {(0, 1): [known], (0, 2): [known], (1, 2): [known]}
        triples = {(0, 1, 2): [(Signature(Fraction(5), 0), known, known)]}
        with pytest.raises(InvariantBreach):
            incidence(triples, pairs)


@pytest.mark.integration
class TestBetti:
    """Test b0 and b1 of small unions"""

    def test_single_sphere(self):
        """Test one ellipsoid is connected without loops"""
        result = betti01(spheres("sphere"), jobs=1)
        assert (result.b0, result.b1) == (1, 0)
        assert result.d1 == 0

    def test_disjoint_spheres(self):
        """Test two disjoint spheres are two components"""
        result = betti01(spheres("two-spheres"), jobs=1)
        assert (result.b0, result.b1) == (2, 0)
        assert result.pair_components == {}

    def test_empty_input(self):
        """Test at least one object is required"""
        with pytest.raises(ValueError):
            betti01([])

    def test_to_dict_keys(self):
        """Test the report uses 1-based pair names"""
        data = betti01(spheres("sphere"), jobs=1).to_dict()
        assert set(data) == {
            "b0", "b1", "d0", "d1", "rankA", "rankB", "pairComponents", "tripleComponents",
        }
        assert data["pairComponents"] == {}


@pytest.mark.slow
class TestEllipsoidArrangements:
    """Test the catalog arrangements"""

    def test_three_ellipsoids(self):
        """Test P1..P3 form one component without loops"""
        result = betti01(arrangement("ellipsoids3"), jobs=1)
        assert (result.b0, result.b1) == (1, 0)
        assert (result.rank_a, result.rank_b, result.d1) == (2, 2, 4)
        assert result.matrix_a.shape == (3, 3)
        assert result.matrix_b.shape == (8, 4)

    @pytest.mark.parametrize("order", [(2, 1, 0), (1, 2, 0)])
    def test_three_ellipsoids_permuted(self, order):
        """Test reordering the objects keeps the Betti numbers and ranks"""
        lines = CATALOG["ellipsoids3"].lines
        objects = [parse_object_line(lines[i], n) for n, i in enumerate(order)]
        result = betti01(objects, jobs=1)
        assert (result.b0, result.b1) == (1, 0)
        assert (result.rank_a, result.rank_b, result.d1) == (2, 2, 4)

    def test_six_ellipsoids(self):
        """Test P1..P6 have b1 = 3"""
        result = betti01(arrangement("ellipsoids6"), jobs=0)
        assert result.b1 == 3
        assert (result.rank_a, result.rank_b, result.d1) == (5, 4, 12)

    def test_seven_ellipsoids(self):
        """Test adding P7 keeps b1 = 3"""
        result = betti01(arrangement("ellipsoids7"), jobs=0)
        assert result.b1 == 3
        assert (result.rank_a, result.rank_b, result.d1) == (6, 7, 16)

    def test_twenty_ellipsoids(self):
        """Test P8..P27 have b1 = 33"""
        result = betti01(arrangement("ellipsoids20"), jobs=0)
        assert result.b1 == 33
        assert (result.rank_a, result.rank_b, result.d1) == (19, 55, 107)
