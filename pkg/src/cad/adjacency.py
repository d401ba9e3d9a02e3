"""
Cell Adjacency
Which 1-cells of a decomposition have a given 0-cell in their closure
"""

import logging
from typing import List, Optional, Tuple

from src.core.errors import InvariantBreach

from .decomposition import CadResult, Cell, Label, StackNode
from .objects import Region

logger = logging.getLogger(__name__)


def plane_neighbours(cad: CadResult, vertex: Label) -> List[Label]:
    """
    Plane 1-cells adjacent to a plane 0-cell

    The fiber intervals just below and above it, and the band sections whose branch
    converges to it from either side.
    """
    column, j = vertex
    i, k = column // 2 - 1, j // 2 - 1
    arrangement = cad.arrangement
    neighbours = [(column, j - 1), (column, j + 1)]
    for b, branch in enumerate(arrangement.bands[i].branches):
        if branch.right == k:
            neighbours.append((column - 1, 2 * b + 2))
    for b, branch in enumerate(arrangement.bands[i + 1].branches):
        if branch.left == k:
            neighbours.append((column + 1, 2 * b + 2))
    return neighbours


def _landing(nodes: List[StackNode], node: StackNode) -> Optional[int]:
    """Index of the node a section converges to, following one of its roots"""
    surface, slot = node.members[0]
    for target in (slot, 0):
        for n, candidate in enumerate(nodes):
            if candidate.contains(surface, target):
                return n
    return None


def _lifted(plane: Cell) -> List[StackNode]:
    if plane.nodes is None:
        raise InvariantBreach(f"no stack above plane cell {plane.label}")
    return plane.nodes


def adjacency_01(cad: CadResult, region: Optional[Region] = None) -> List[Tuple[Label, Label]]:
    """
    Adjacent pairs (0-cell, 1-cell) of level 3

    Above a plane 0-cell every section touches the sectors right below and above it. Each
    section above an adjacent plane 1-cell converges to the section of the 0-cell holding the
    same root of the same quadric, or its double root.

    Args:
        cad: a decomposition, possibly restricted to plane 0- and 1-cells
        region: keep only pairs of cells where the region holds

    Raises:
        InvariantBreach: a section finds no limit above the 0-cell
    """
    truth = cad.truth(region, max_dimension=1) if region is not None else None
    pairs: List[Tuple[Label, Label]] = []
    for vertex in cad.cells[2]:
        if vertex.dimension != 0:
            continue
        nodes = _lifted(vertex)
        for n in range(len(nodes)):
            section = vertex.label + (2 * n + 2,)
            pairs.append((section, vertex.label + (2 * n + 1,)))
            pairs.append((section, vertex.label + (2 * n + 3,)))
        for label in plane_neighbours(cad, vertex.label):
            edge = cad.cell(label)
            for m, node in enumerate(_lifted(edge)):
                n = _landing(nodes, node)
                if n is None:
                    raise InvariantBreach(
                        f"section {edge.label + (2 * m + 2,)} has no limit above {vertex.label}"
                    )
                pairs.append((vertex.label + (2 * n + 2,), edge.label + (2 * m + 2,)))

    if truth is not None:
        pairs = [(a, b) for a, b in pairs if truth[a] and truth[b]]
    logger.debug(f"{len(pairs)} adjacent 0/1-cell pairs")
    return pairs
