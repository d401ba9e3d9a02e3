"""
Core components for realgeom: configuration, errors and the built-in example catalog
"""

from .config import EngineConfig, load_config
from .errors import (
    CommonFactorError,
    DegreeError,
    InvariantBreach,
    NotGenericError,
    PolynomialSyntaxError,
    RealGeomError,
    RefusedInputError,
    RegionSyntaxError,
    ShearBudgetExceeded,
    UnknownVariableError,
    ZeroPolynomialError,
)

__all__ = [
    "EngineConfig",
    "load_config",
    "CommonFactorError",
    "DegreeError",
    "InvariantBreach",
    "NotGenericError",
    "PolynomialSyntaxError",
    "RealGeomError",
    "RefusedInputError",
    "RegionSyntaxError",
    "ShearBudgetExceeded",
    "UnknownVariableError",
    "ZeroPolynomialError",
]
