"""
realgeom - Exact Real Algebraic Geometry
Plane curve topology, intersections of three quadrics and Betti numbers of ellipsoid arrangements

This package provides:
- Exact polynomial arithmetic and subresultant sequences
- Certified real root isolation and algebraic numbers
- Topology of plane curves and curve arrangements
- Intersection of three quadric surfaces
- Cylindrical decompositions and Betti numbers of quadric arrangements
"""

__version__ = "1.0.0"
__author__ = "realgeom developers"

from .core.config import EngineConfig, load_config
from .core.errors import RealGeomError, RefusedInputError

__all__ = [
    "EngineConfig",
    "load_config",
    "RealGeomError",
    "RefusedInputError",
]
