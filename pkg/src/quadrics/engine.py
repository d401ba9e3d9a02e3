"""
Three-Quadric Intersection Engine
Preparation, projection, arrangement analysis and lifting in one call
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.arith.polynomial import MPoly
from src.quadrics.analysis import ArrangementAnalysis, analyze_arrangement
from src.quadrics.lifting import Lifter, SpatialGraph, SpatialPoint, lift_curve
from src.quadrics.prepare import CoordinateChange, PreparedTriple, prepare
from src.quadrics.projection import ProjectionSet, project
from src.topology.arrangement import DEFAULT_SHEAR_BUDGET

logger = logging.getLogger(__name__)


@dataclass
class IntersectionResult:
    """
    Real intersection of three quadrics: isolated points and an embedded graph

    Coordinates are in the input frame. ``shears`` records the plane shears used for the curve
    arrangement and for the candidate points.
    """
    isolated: List[SpatialPoint] = field(default_factory=list)
    graph: SpatialGraph = field(default_factory=SpatialGraph)
    projection: Optional[ProjectionSet] = None
    analysis: Optional[ArrangementAnalysis] = field(default=None, repr=False)
    change: CoordinateChange = field(default_factory=CoordinateChange)
    shears: Dict[str, int] = field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return not self.isolated and self.graph.is_empty

    @property
    def finite(self) -> bool:
        """True when the cut curves share no component"""
        return self.projection is not None and self.projection.finite

    @property
    def meta(self) -> Dict[str, Any]:
        return {
            "shears": dict(self.shears),
            "coordinate_change": [list(row) for row in self.change.matrix],
            "finite": self.finite,
        }


def intersect_prepared(
    triple: PreparedTriple, budget: int = DEFAULT_SHEAR_BUDGET
) -> IntersectionResult:
    """Intersection of an already prepared triple"""
    projection = project(triple)
    analysis = analyze_arrangement(triple, projection, budget)
    result = IntersectionResult(projection=projection, analysis=analysis, change=triple.change)

    lifters: Dict[int, Lifter] = {}
    for candidate in analysis.candidates:
        t = candidate.point.shear
        if t not in lifters:
            lifters[t] = Lifter(triple, t)
        result.shears["points"] = t
        result.isolated.extend(lifters[t].lift(candidate.point, candidate.on_sil))

    if analysis.curve is not None:
        result.shears["curve"] = analysis.curve.shear
        result.graph, stray = lift_curve(triple, analysis.curve)
        result.isolated.extend(stray)

    logger.info(
        f"Intersection: {len(result.isolated)} isolated points, "
        f"{len(result.graph.vertices)} graph vertices, {len(result.graph.edges)} edges"
    )
    return result


def intersect_three_quadrics(
    p1: MPoly, p2: MPoly, p3: MPoly, budget: int = DEFAULT_SHEAR_BUDGET
) -> IntersectionResult:
    """
    Real intersection of three quadrics

    Args:
        p1: the quadric whose roots are lifted; it must not share a plane with P2 or P3
        p2: second quadric
        p3: third quadric
        budget: shears tried by the preparation and by each arrangement

    Returns:
        isolated points and the spatial graph of the curve part

    Raises:
        RefusedInputError: degenerate inputs, with their classification
        ShearBudgetExceeded: generic position was not reached
    """
    triple = prepare(p1, p2, p3, budget)
    return intersect_prepared(triple, budget)
