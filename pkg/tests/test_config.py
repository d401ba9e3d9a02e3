"""
Tests for engine configuration and logging levels
"""

import pytest

from src.core.config import EngineConfig, load_config
from src.utils.logs import level_for

pytestmark = pytest.mark.unit


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for name in ("PRECISION", "JOBS", "SHEAR_BUDGET", "REFINEMENT_LIMIT",
                 "ADMIT_DEFINITE_QUADRICS", "LOG_LEVEL"):
        monkeypatch.delenv(f"REALGEOM_{name}", raising=False)


class TestEngineConfig:
    """Test defaults and validation"""

    def test_defaults(self):
        """Test the default tunables"""
        config = EngineConfig()
        assert config.precision == 15
        assert config.shear_budget == 32
        assert config.jobs == 0
        assert not config.admit_definite_quadrics
        assert config.log_level == "WARNING"

    @pytest.mark.parametrize("values", [
        {"precision": 0},
        {"jobs": -1},
        {"shear_budget": 0},
        {"refinement_limit": 0},
    ])
    def test_validation(self, values):
        """Test out-of-range values are rejected"""
        with pytest.raises(ValueError):
            EngineConfig(**values)

    def test_overrides_ignore_none(self):
        """Test None overrides keep the current value"""
        config = EngineConfig().with_overrides(precision=30, jobs=None)
        assert config.precision == 30
        assert config.jobs == 0

    def test_to_dict(self):
        """Test the dictionary form lists every field"""
        assert set(EngineConfig().to_dict()) == {
            "precision", "shear_budget", "jobs", "refinement_limit",
            "admit_definite_quadrics", "log_level", "extra",
        }


class TestLoadConfig:
    """Test the configuration sources and their order"""

    def test_no_file(self):
        """Test defaults without a file in the working directory"""
        assert load_config() == EngineConfig()

    def test_default_file(self, tmp_path):
        """Test ./realgeom.yaml is read when present"""
        (tmp_path / "realgeom.yaml").write_text("precision: 25\nshear_budget: 8\n")
        config = load_config()
        assert config.precision == 25
        assert config.shear_budget == 8

    def test_unknown_keys_kept(self, tmp_path):
        """Test unknown keys land in extra"""
        path = tmp_path / "custom.yaml"
        path.write_text("jobs: 2\ncolor: blue\n")
        config = load_config(path)
        assert config.jobs == 2
        assert config.extra == {"color": "blue"}

    def test_missing_explicit_file(self, tmp_path):
        """Test a named file must exist"""
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "absent.yaml")

    def test_non_mapping(self, tmp_path):
        """Test a YAML list is refused"""
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ValueError):
            load_config(path)

    def test_environment(self, monkeypatch, tmp_path):
        """Test REALGEOM_* variables beat the file and are coerced"""
        (tmp_path / "realgeom.yaml").write_text("precision: 25\n")
        monkeypatch.setenv("REALGEOM_PRECISION", "40")
        monkeypatch.setenv("REALGEOM_ADMIT_DEFINITE_QUADRICS", "yes")
        config = load_config()
        assert config.precision == 40
        assert config.admit_definite_quadrics is True

    def test_overrides_win(self, monkeypatch):
        """Test explicit overrides beat the environment"""
        monkeypatch.setenv("REALGEOM_JOBS", "4")
        assert load_config(jobs=1).jobs == 1
        assert load_config(jobs=None).jobs == 4


class TestLevels:
    """Test -v counts to log levels"""

    def test_levels(self):
        """Test zero keeps the default, then INFO and DEBUG"""
        assert level_for(0, "ERROR") == "ERROR"
        assert level_for(1) == "INFO"
        assert level_for(2) == "DEBUG"
        assert level_for(5) == "DEBUG"
