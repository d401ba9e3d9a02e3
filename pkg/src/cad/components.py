"""
Connected Components
Components of a closed region read off the 0- and 1-cells of a decomposition
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.core.errors import InvariantBreach
from src.roots.algebraic import compare
from src.roots.values import Value
from src.topology.graph import component_labels

from .adjacency import adjacency_01
from .decomposition import CadResult, Label
from .objects import Region

logger = logging.getLogger(__name__)


@dataclass
class Component:
    """
    A connected component, as the true 0- and 1-cells it contains

    ``anchor`` is its lexicographically least 0-cell, which lies on the leftmost critical
    fiber the component reaches.
    """
    index: int
    cells: List[Label]
    anchor: Label

    def __contains__(self, label: Label) -> bool:
        return tuple(label) in self.cells


@dataclass(frozen=True)
class Signature:
    """
    Identifies a component across decompositions sharing a frame

    ``x`` is the abscissa of its leftmost point and ``rank`` its position among the
    components of the same region anchored on that fiber.
    """
    x: Value
    rank: int

    def matches(self, other: "Signature") -> bool:
        return self.rank == other.rank and compare(self.x, other.x) == 0


def components(cad: CadResult, region: Region) -> List[Component]:
    """
    Connected components of a closed region, numbered by their least cell label

    Raises:
        InvariantBreach: a component holds no 0-cell
    """
    truth = cad.truth(region, max_dimension=1)
    cells = sorted(label for label, holds in truth.items() if holds)
    ids: Dict[Label, int] = {label: n for n, label in enumerate(cells)}
    edges = [(ids[a], ids[b]) for a, b in adjacency_01(cad, region)]
    labels = component_labels(len(cells), edges)

    groups: Dict[int, List[Label]] = {}
    for label, group in zip(cells, labels):
        groups.setdefault(int(group), []).append(label)
    found = []
    for members in sorted(groups.values(), key=lambda g: g[0]):
        vertices = [label for label in members if cad.cell(label).dimension == 0]
        if not vertices:
            raise InvariantBreach(f"component of {members[0]} holds no 0-cell")
        found.append(Component(len(found), members, vertices[0]))
    logger.debug(f"Region {region}: {len(found)} components")
    return found


def component_of(found: List[Component]) -> Dict[Label, int]:
    """Component index of every cell"""
    return {label: c.index for c in found for label in c.cells}


def signatures(cad: CadResult, found: List[Component]) -> List[Signature]:
    """Signature of each component, in the order given"""
    ranks: Dict[int, List[Tuple[Label, int]]] = {}
    for c in found:
        ranks.setdefault(c.anchor[0], []).append((c.anchor, c.index))
    position = {}
    for anchored in ranks.values():
        for rank, (_, index) in enumerate(sorted(anchored)):
            position[index] = rank
    return [Signature(cad.abscissa(c.anchor[0]), position[c.index]) for c in found]
