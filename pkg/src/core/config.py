"""
Engine Configuration
Defaults, YAML files and environment overrides for the realgeom engines
"""

import logging
import os
from dataclasses import dataclass, field, fields, asdict, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = "realgeom.yaml"
ENV_PREFIX = "REALGEOM_"


@dataclass(frozen=True)
class EngineConfig:
    """Tunables shared by the topology, intersection and Betti engines"""
    precision: int = 15  # significant digits of decimal output
    shear_budget: int = 32
    jobs: int = 0  # 0 = one worker per CPU, 1 = sequential
    refinement_limit: int = 4000
    admit_definite_quadrics: bool = False
    log_level: str = "WARNING"
    extra: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError(f"precision must be positive, got {self.precision}")
        if self.jobs < 0:
            raise ValueError(f"jobs must be non-negative, got {self.jobs}")
        if self.shear_budget < 1:
            raise ValueError(f"shear budget must be positive, got {self.shear_budget}")
        if self.refinement_limit < 1:
            raise ValueError("refinement limit must be positive")

    def with_overrides(self, **overrides) -> "EngineConfig":
        """Return a copy with the non-None overrides applied"""
        values = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **values)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _coerce(name: str, raw: str) -> Any:
    kinds = {f.name: f.type for f in fields(EngineConfig)}
    kind = kinds.get(name)
    if kind in (int, "int"):
        return int(raw)
    if kind in (bool, "bool"):
        return raw.strip().lower() in ("1", "true", "yes", "on")
    return raw


def _from_environment() -> Dict[str, Any]:
    known = {f.name for f in fields(EngineConfig)} - {"extra"}
    values = {}
    for key, raw in os.environ.items():
        if not key.startswith(ENV_PREFIX):
            continue
        name = key[len(ENV_PREFIX):].lower()
        if name in known:
            values[name] = _coerce(name, raw)
    return values


def load_config(path: Optional[Union[str, Path]] = None, **overrides) -> EngineConfig:
    """
    Build the effective configuration

    Later sources win: defaults, YAML file, REALGEOM_* environment variables, overrides.

    Args:
        path: YAML file; when omitted ./realgeom.yaml is read if it exists
        **overrides: explicit values (None entries are ignored)

    Returns:
        Validated EngineConfig
    """
    values: Dict[str, Any] = {}
    config_path = Path(path) if path is not None else Path(DEFAULT_CONFIG_FILE)
    if config_path.is_file():
        with open(config_path, "r", encoding="utf-8") as fh:
            loaded = yaml.safe_load(fh) or {}
        if not isinstance(loaded, dict):
            raise ValueError(f"{config_path}: expected a mapping at top level")
        known = {f.name for f in fields(EngineConfig)}
        extra = {k: v for k, v in loaded.items() if k not in known}
        values.update({k: v for k, v in loaded.items() if k in known})
        if extra:
            values["extra"] = extra
        logger.debug(f"Loaded configuration from {config_path}")
    elif path is not None:
        raise FileNotFoundError(f"configuration file not found: {config_path}")

    values.update(_from_environment())
    values.update({k: v for k, v in overrides.items() if v is not None})
    return EngineConfig(**values)
