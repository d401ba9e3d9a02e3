"""
Projection
Silhouette and cut curves of a prepared quadric triple, and the split of their common part
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from src.arith.polynomial import (
    MPoly,
    gcd_free_part,
    polynomial_gcd,
    square_free_part,
)
from src.quadrics.prepare import PreparedTriple
from src.subresultants.sequence import signed_subresultants

logger = logging.getLogger(__name__)


@dataclass
class ProjectionSet:
    """
    Plane curves of a prepared triple, every entry canonical

    ``cuts`` holds Res_X3(P1, P2) and Res_X3(P1, P3). G is the square-free common part of the
    two cuts, split as G = g_tilde * sil_tilde where sil_tilde is the part shared with the
    silhouette.
    """
    sil: MPoly
    cuts: Tuple[MPoly, MPoly]
    g: MPoly
    h2: MPoly
    h3: MPoly
    sil_tilde: MPoly
    g_tilde: MPoly

    @property
    def finite(self) -> bool:
        """True when the cut curves share no component"""
        return self.g.is_constant

    def dump_lines(self) -> List[str]:
        """Canonical text form, one curve per line"""
        return [
            f"Sil(P1) = {self.sil.to_text()}",
            f"cut(P1,P2) = {self.cuts[0].to_text()}",
            f"cut(P1,P3) = {self.cuts[1].to_text()}",
            f"G = {self.g.to_text()}",
            f"H2 = {self.h2.to_text()}",
            f"H3 = {self.h3.to_text()}",
            f"SilTilde = {self.sil_tilde.to_text()}",
            f"GTilde = {self.g_tilde.to_text()}",
        ]


def _resultant(p: MPoly, q: MPoly) -> MPoly:
    return signed_subresultants(p, q, "x3").resultant.canonical()


def _split(g: MPoly, sil: MPoly) -> Tuple[MPoly, MPoly]:
    sil_tilde = polynomial_gcd(g, sil).canonical()
    g_tilde = g.exquo(sil_tilde).canonical()
    while True:
        extra = polynomial_gcd(g_tilde, sil_tilde)
        if extra.is_constant:
            return sil_tilde, g_tilde
        sil_tilde = (sil_tilde * extra).canonical()
        g_tilde = g_tilde.exquo(extra).canonical()


def project(triple: PreparedTriple) -> ProjectionSet:
    """
    Plane curves whose arrangement carries the topology of the intersection

    Args:
        triple: X3-regular triple from ``prepare``

    Returns:
        the projection set; every polynomial is bivariate and canonical
    """
    p1, p2, p3 = triple.polys
    sil = _resultant(p1, p1.derivative(2))
    cuts = (triple.ladder(1).resultant.canonical(), triple.ladder(2).resultant.canonical())
    g = square_free_part(polynomial_gcd(cuts[0], cuts[1]), "x2")
    h2 = gcd_free_part(square_free_part(cuts[0], "x2"), g, "x2")
    h3 = gcd_free_part(square_free_part(cuts[1], "x2"), g, "x2")
    sil_tilde, g_tilde = _split(g, sil)
    result = ProjectionSet(sil, cuts, g, h2, h3, sil_tilde, g_tilde)
    logger.info(
        f"Projection: deg G = {g.total_degree}, deg H2 = {h2.total_degree}, "
        f"deg H3 = {h3.total_degree}"
    )
    for line in result.dump_lines():
        logger.debug(line)
    return result
