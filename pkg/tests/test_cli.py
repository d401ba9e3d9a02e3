"""
Tests for the realgeom command line
"""

import json

import pytest
from click.testing import CliRunner

from src.cli.main import cli


@pytest.fixture
def runner(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    return CliRunner()


@pytest.mark.unit
class TestExamples:
    """Test the examples subcommand"""

    def test_listing(self, runner):
        """Test the listing names inputs of every subcommand"""
        result = runner.invoke(cli, ["examples"])
        assert result.exit_code == 0
        assert "circle" in result.output
        assert "quad2" in result.output
        assert "ellipsoids3" in result.output

    def test_print_one(self, runner):
        """Test an example prints in the input-file format"""
        result = runner.invoke(cli, ["examples", "circle"])
        assert result.exit_code == 0
        assert result.output == "x1^2 + x2^2 - 1\n"

    def test_unknown_example(self, runner):
        """Test an unknown name is a usage error"""
        result = runner.invoke(cli, ["examples", "nosuch"])
        assert result.exit_code == 2


@pytest.mark.integration
class TestCommands:
    """Test the computing subcommands"""

    def test_topology_json(self, runner):
        """Test the circle's band counts in JSON"""
        result = runner.invoke(cli, ["topology", "--example", "circle"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["bandCounts"] == [0, 2, 0]
        assert data["fiberCounts"] == [1, 1]
        assert data["shear"] == 0

    def test_topology_from_file(self, runner, tmp_path):
        """Test the first polynomial of a file is read, comments skipped"""
        path = tmp_path / "curve.txt"
        path.write_text("# unit circle\nx1^2 + x2^2 - 1\n")
        result = runner.invoke(cli, ["topology", str(path)])
        assert result.exit_code == 0
        assert json.loads(result.output)["bandCounts"] == [0, 2, 0]

    def test_cad_counts(self, runner):
        """Test the sphere's cell counts"""
        result = runner.invoke(cli, ["cad", "--example", "sphere"])
        assert result.exit_code == 0
        assert json.loads(result.output)["counts"] == {"1": 5, "2": 13, "3": 25}

    def test_cad_dot_needs_region(self, runner):
        """Test dot output of a decomposition requires a region"""
        result = runner.invoke(cli, ["cad", "--example", "sphere", "--format", "dot"])
        assert result.exit_code == 2

    def test_refused_plane(self, runner, tmp_path):
        """Test a plane among the quadrics exits with code 2"""
        path = tmp_path / "triple.txt"
        path.write_text("x1 + x2\nx1^2 + x2^2 + x3^2 - 1\nx1^2 + x2^2 - x3\n")
        result = runner.invoke(cli, ["intersect", str(path)])
        assert result.exit_code == 2

    def test_syntax_error(self, runner, tmp_path):
        """Test a malformed polynomial exits with code 2"""
        path = tmp_path / "curve.txt"
        path.write_text("x1^2 + * x2\n")
        result = runner.invoke(cli, ["topology", str(path)])
        assert result.exit_code == 2

    def test_missing_input(self, runner):
        """Test a subcommand without input is a usage error"""
        result = runner.invoke(cli, ["topology"])
        assert result.exit_code == 2

    def test_file_and_example(self, runner, tmp_path):
        """Test a file and --example together are refused"""
        path = tmp_path / "curve.txt"
        path.write_text("x1^2 + x2^2 - 1\n")
        result = runner.invoke(cli, ["topology", str(path), "--example", "circle"])
        assert result.exit_code == 2

    def test_betti_single_ellipsoid(self, runner, tmp_path):
        """Test one ellipsoid gives b0 = 1, b1 = 0 and the matrix dump"""
        path = tmp_path / "objects.txt"
        path.write_text("x1^2 + x2^2 + x3^2 - 1 =0\n")
        result = runner.invoke(cli, ["betti", str(path), "--jobs", "1", "--dump-matrices"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert (data["b0"], data["b1"]) == (1, 0)
        assert data["matrices"][0].startswith("A 0 1")

    def test_bad_config(self, runner, tmp_path):
        """Test an invalid configuration file is a usage error"""
        path = tmp_path / "bad.yaml"
        path.write_text("precision: 0\n")
        result = runner.invoke(cli, ["--config", str(path), "examples"])
        assert result.exit_code == 2


@pytest.mark.integration
class TestIntersectJson:
    """Test the JSON document of the intersect subcommand"""

    def test_isolated_triples(self, runner):
        """Test isolated points are bare coordinate triples with exact zero heights"""
        result = runner.invoke(cli, ["intersect", "--example", "quad3"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["empty"] is False
        assert len(data["isolated"]) == 2
        for point in data["isolated"]:
            assert isinstance(point, list)
            assert len(point) == 3
            assert all(isinstance(c, str) for c in point)
            assert point[2] == "0"
        assert data["graph"] == {"vertices": [], "edges": []}

    def test_precision_in_meta(self, runner):
        """Test the meta block records the printed precision"""
        result = runner.invoke(cli, ["intersect", "--example", "quad3", "--precision", "20"])
        assert result.exit_code == 0
        meta = json.loads(result.output)["meta"]
        assert meta["precision"] == 20
        assert meta["finite"] in (True, False)
        assert "coordinate_change" in meta

    def test_graph_vertices_keep_kind(self, runner):
        """Test graph vertices carry coordinates, slot and kind"""
        result = runner.invoke(cli, ["intersect", "--example", "quad2"])
        assert result.exit_code == 0
        vertices = json.loads(result.output)["graph"]["vertices"]
        assert len(vertices) == 4
        assert {"critical"} <= {v["kind"] for v in vertices}
        assert all(len(v["coordinates"]) == 3 for v in vertices)
