"""
Curve Topology
The TOP output of a plane curve, its variant relative to a second curve, generic position
verdicts and the common points of two curves
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from src.arith.polynomial import MPoly, polynomial_gcd, square_free_part
from src.core.errors import (
    CommonFactorError,
    DegreeError,
    NotGenericError,
    ShearBudgetExceeded,
)
from src.roots.algebraic import AlgebraicNumber, isolate_real_roots
from src.subresultants.sequence import (
    gcd_degree_at,
    has_single_root,
    shared_root_y,
    signed_subresultants,
)
from src.topology.arrangement import DEFAULT_SHEAR_BUDGET, PlanarArrangement, arrange
from src.topology.points import PlanePoint
from src.topology.shear import shear

logger = logging.getLogger(__name__)


@dataclass
class GenericityVerdict:
    """Outcome of a generic position test; ``condition`` names the first failing clause"""
    generic: bool
    condition: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.generic


@dataclass
class MarkedPoint:
    """A fiber point where the curve meets an auxiliary curve (1-based indices)"""
    fiber: int
    position: int
    curves: Tuple[int, ...]


@dataclass
class PlanarTopology:
    """
    TOP output: abscissas x_1..x_r, band counts m_0..m_r, fiber counts n_1..n_r and the
    critical indices c_1..c_r (1-based position of the critical point in its fiber)

    Abscissas are those of the sheared curve; ``shear`` records t.
    """
    abscissas: List[AlgebraicNumber]
    band_counts: List[int]
    fiber_counts: List[int]
    critical_indices: List[int]
    marked: List[MarkedPoint] = field(default_factory=list)
    shear: int = 0
    arrangement: Optional[PlanarArrangement] = field(default=None, repr=False)

    @property
    def r(self) -> int:
        return len(self.abscissas)


def _reduce(poly: MPoly) -> MPoly:
    if poly.degree(2) > 0:
        raise ValueError(f"{poly.to_text()} is not a plane curve")
    if poly.is_zero or poly.is_constant:
        raise DegreeError("a plane curve needs a nonconstant polynomial")
    return square_free_part(poly, "x2")


def is_generic_position(p1: MPoly, p2: Optional[MPoly] = None) -> GenericityVerdict:
    """
    Check generic position of a pair, or of a single curve against its X2-derivative

    The clauses are X2-regularity, coprimality, and a single distinct common root above every
    real root of the resultant.
    """
    q = p2 if p2 is not None else p1.derivative(1)
    for poly in (p1, q) if p2 is not None else (p1,):
        if not poly.is_regular_in(1):
            return GenericityVerdict(False, "regularity", poly.to_text())
    if p2 is None and q.degree(1) < 1:
        return GenericityVerdict(True)
    common = polynomial_gcd(p1, q)
    if not common.is_constant:
        return GenericityVerdict(False, "coprimality", common.to_text())
    ladder = signed_subresultants(p1, q, 1)
    for x in isolate_real_roots(ladder.resultant, var="x1"):
        j = gcd_degree_at(ladder, x)
        if not has_single_root(ladder, j, x):
            return GenericityVerdict(False, "single-critical-point", f"gcd of degree {j}")
    return GenericityVerdict(True)


def _positions(fiber, curve: Optional[int]) -> List[int]:
    return list(range(len(fiber.points))) if curve is None else fiber.positions_of(curve)


def topology_of_arrangement(
    arrangement: PlanarArrangement, curve: Optional[int] = 0
) -> PlanarTopology:
    """TOP output of one main curve of an arrangement, or of their union when curve is None"""
    band_counts = [
        len(b.branches) if curve is None else len(b.branches_of(curve)) for b in arrangement.bands
    ]
    fiber_counts = []
    critical_indices = []
    marked = []
    for i, fiber in enumerate(arrangement.fibers):
        positions = _positions(fiber, curve)
        fiber_counts.append(len(positions))
        critical = fiber.critical_index
        if critical in positions:
            critical_indices.append(positions.index(critical) + 1)
            point = fiber.points[critical]
            if point.aux:
                marked.append(MarkedPoint(i + 1, positions.index(critical) + 1, point.aux))
        else:
            critical_indices.append(0)
    return PlanarTopology(
        abscissas=arrangement.abscissas,
        band_counts=band_counts,
        fiber_counts=fiber_counts,
        critical_indices=critical_indices,
        marked=marked,
        shear=arrangement.shear,
        arrangement=arrangement,
    )


def top(poly: MPoly, budget: int = DEFAULT_SHEAR_BUDGET) -> PlanarTopology:
    """
    Topology of a plane curve

    The curve is replaced by its square-free part and sheared by t = 0, 1, 2, ... until it is
    in generic position.

    Raises:
        DegreeError: the polynomial is constant
        ShearBudgetExceeded: no shear within the budget works
    """
    curve = _reduce(poly)
    result = topology_of_arrangement(arrange([curve], budget=budget))
    logger.info(f"Topology of {curve.to_text()}: {result.r} critical abscissas")
    return result


def top_with_respect_to(
    poly: MPoly, other: MPoly, budget: int = DEFAULT_SHEAR_BUDGET
) -> PlanarTopology:
    """
    Topology of a curve whose fibers also stop where it meets a second curve

    Raises:
        CommonFactorError: the curves share a component
    """
    curve = _reduce(poly)
    result = topology_of_arrangement(arrange([curve], [_reduce(other)], budget=budget))
    logger.info(f"Topology relative to a second curve: {len(result.marked)} marked points")
    return result


def _common_points_sheared(p: MPoly, q: MPoly, t: int) -> List[PlanePoint]:
    p, q = shear(p, t), shear(q, t)
    for poly in (p, q):
        if not poly.is_regular_in(1):
            raise NotGenericError("regularity", poly.to_text())
    ladder = signed_subresultants(p, q, 1)
    if ladder.resultant.is_zero:
        raise CommonFactorError("curves share a component", polynomial_gcd(p, q))
    points = []
    for x in isolate_real_roots(ladder.resultant, var="x1"):
        j = gcd_degree_at(ladder, x)
        if not has_single_root(ladder, j, x):
            raise NotGenericError("single-critical-point", f"gcd of degree {j}")
        points.append(PlanePoint(x, shared_root_y(ladder, j, x), t, ("common",)))
    return points


def common_points(
    p: MPoly, q: MPoly, budget: int = DEFAULT_SHEAR_BUDGET, start: int = 0
) -> List[PlanePoint]:
    """
    Real common points of two coprime curves

    Each point carries its shear; ``PlanePoint.original()`` gives coordinates in the input
    frame. A constant curve has no points.

    Raises:
        CommonFactorError: the curves share a component
        ShearBudgetExceeded: no shear within the budget gives generic position
    """
    if p.is_constant or q.is_constant:
        return []
    p, q = _reduce(p), _reduce(q)
    attempted: List[int] = []
    last: Optional[NotGenericError] = None
    for t in range(start, start + budget):
        attempted.append(t)
        try:
            points = _common_points_sheared(p, q, t)
        except NotGenericError as error:
            logger.info(f"Common points: shear t={t} rejected: {error}")
            last = error
            continue
        logger.debug(f"{len(points)} common points with shear t={t}")
        return points
    raise ShearBudgetExceeded(attempted, last)
