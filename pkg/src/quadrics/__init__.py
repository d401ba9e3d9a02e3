"""
Quadric intersection: preparation, projection, arrangement analysis and lifting
"""

from .prepare import (
    CoordinateChange,
    PreparedTriple,
    check_pair,
    check_quadric,
    prepare,
    quadratic_form,
    regularize,
)
from .projection import ProjectionSet, project
from .analysis import ArrangementAnalysis, PointCandidate, analyze_arrangement
from .lifting import (
    Lifter,
    QuadricFiber,
    SpatialGraph,
    SpatialPoint,
    lift_curve,
    ALL,
    lift_point,
    shared_roots,
)
from .engine import IntersectionResult, intersect_prepared, intersect_three_quadrics

__all__ = [
    "CoordinateChange",
    "PreparedTriple",
    "prepare",
    "check_pair",
    "check_quadric",
    "regularize",
    "quadratic_form",
    "ProjectionSet",
    "project",
    "ArrangementAnalysis",
    "PointCandidate",
    "analyze_arrangement",
    "ALL",
    "Lifter",
    "QuadricFiber",
    "SpatialGraph",
    "SpatialPoint",
    "lift_curve",
    "lift_point",
    "shared_roots",
    "IntersectionResult",
    "intersect_prepared",
    "intersect_three_quadrics",
]
