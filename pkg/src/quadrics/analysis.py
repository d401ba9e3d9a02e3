"""
Arrangement Analysis
Candidate isolated points from the two cut curves, and the arrangement of their common part
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from src.arith.polynomial import MPoly, gcd_free_basis
from src.quadrics.prepare import PreparedTriple
from src.quadrics.projection import ProjectionSet
from src.topology.arrangement import DEFAULT_SHEAR_BUDGET, PlanarArrangement, arrange
from src.topology.points import PlanePoint
from src.topology.shear import shear
from src.topology.top import PlanarTopology, common_points, topology_of_arrangement

logger = logging.getLogger(__name__)


@dataclass
class PointCandidate:
    """A common point of H2 and H3 off G; ``on_sil`` when P1 has a double root above it"""
    point: PlanePoint
    on_sil: bool


@dataclass
class ArrangementAnalysis:
    """
    Everything the lifting phase needs

    ``mains`` are the factors of G drawn in the arrangement; ``aux`` are the silhouette and
    first-subresultant factors that only cut its fibers. ``curve`` is None when G = 1.
    """
    projection: ProjectionSet
    mains: List[MPoly]
    aux: List[MPoly]
    candidates: List[PointCandidate] = field(default_factory=list)
    curve: Optional[PlanarArrangement] = None

    @property
    def topology(self) -> Optional[PlanarTopology]:
        """TOP output of Zer(G), fibers stopping at the auxiliary curves"""
        if self.curve is None:
            return None
        return topology_of_arrangement(self.curve, None)


def _first_subresultants(triple: PreparedTriple) -> List[MPoly]:
    entries = []
    for k in (1, 2):
        entry = triple.ladder(k).principal(1)
        if not entry.is_zero and not entry.is_constant:
            entries.append(entry)
    return entries


def split_basis(projection: ProjectionSet, extra: List[MPoly]):
    """Factors of G and the remaining pairwise coprime factors of Sil(P1) and ``extra``"""
    basis = gcd_free_basis([projection.g, projection.sil] + extra)
    mains = [b for b in basis if b.divides(projection.g)]
    aux = [b for b in basis if not b.divides(projection.g)]
    return mains, aux


def point_candidates(
    projection: ProjectionSet, budget: int = DEFAULT_SHEAR_BUDGET
) -> List[PointCandidate]:
    """Real common points of H2 and H3 that are not on G"""
    candidates = []
    for point in common_points(projection.h2, projection.h3, budget):
        if point.sign(shear(projection.g, point.shear)) == 0:
            continue
        on_sil = point.sign(shear(projection.sil, point.shear)) == 0
        candidates.append(PointCandidate(point, on_sil))
    logger.debug(f"{len(candidates)} candidate points from H2 and H3")
    return candidates


def analyze_arrangement(
    triple: PreparedTriple, projection: ProjectionSet, budget: int = DEFAULT_SHEAR_BUDGET
) -> ArrangementAnalysis:
    """
    Candidate points and the planar arrangement of Zer(G)

    The arrangement draws the factors of G and stops its fibers at Sil(P1) and at the first
    subresultants of (P1, P2) and (P1, P3), so that the number of points of P1 above a vertex
    and their membership in P2 and P3 stay constant along every arc.

    Raises:
        ShearBudgetExceeded: no shear within the budget gives generic position
    """
    mains, aux = split_basis(projection, _first_subresultants(triple))
    analysis = ArrangementAnalysis(projection, mains, aux, point_candidates(projection, budget))
    if mains:
        analysis.curve = arrange(mains, aux, budget)
        logger.info(
            f"Arrangement of G: {len(analysis.curve.fibers)} critical fibers, "
            f"shear t={analysis.curve.shear}"
        )
    return analysis
