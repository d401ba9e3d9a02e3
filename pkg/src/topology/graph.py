"""
Planar Graphs
The curve topology as an explicit graph: fiber points and band branches as vertices, stack
adjacencies as edges
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from src.topology.arrangement import PlanarArrangement
from src.topology.points import PlanePoint
from src.topology.top import PlanarTopology

logger = logging.getLogger(__name__)


def component_labels(n: int, edges: Sequence[Tuple[int, int]]) -> np.ndarray:
    """Connected component label of each of n vertices"""
    if n == 0:
        return np.zeros(0, dtype=int)
    rows = [a for a, _ in edges]
    cols = [b for _, b in edges]
    adjacency = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    _, labels = connected_components(adjacency, directed=False)
    return labels


@dataclass
class GraphVertex:
    """A fiber point (kind "fiber") or a band branch (kind "band") of the arrangement"""
    column: int  # 1-based; odd columns are bands
    index: int  # position within the column
    kind: str
    point: PlanePoint
    curves: Tuple[int, ...]


@dataclass
class PlanarGraph:
    vertices: List[GraphVertex] = field(default_factory=list)
    edges: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def euler_characteristic(self) -> int:
        """V - E"""
        return len(self.vertices) - len(self.edges)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def component_labels(self) -> np.ndarray:
        return component_labels(len(self.vertices), self.edges)

    @property
    def component_count(self) -> int:
        labels = self.component_labels()
        return int(labels.max()) + 1 if labels.size else 0


def planar_graph(source: Union[PlanarTopology, PlanarArrangement]) -> PlanarGraph:
    """
    Explicit graph of a curve topology

    Every band branch is joined to the fiber point it converges to on each side; the
    unbounded ends of the outermost bands stay open.
    """
    arrangement = source.arrangement if isinstance(source, PlanarTopology) else source
    graph = PlanarGraph()
    fiber_ids: Dict[Tuple[int, int], int] = {}
    for i, fiber in enumerate(arrangement.fibers):
        for k, p in enumerate(fiber.points):
            fiber_ids[(i, k)] = len(graph.vertices)
            graph.vertices.append(
                GraphVertex(2 * i + 2, k, "fiber", arrangement.fiber_point(i, k), p.curves)
            )
    for i, band in enumerate(arrangement.bands):
        for k, branch in enumerate(band.branches):
            v = len(graph.vertices)
            graph.vertices.append(
                GraphVertex(2 * i + 1, k, "band", arrangement.band_point(i, k), (branch.curve,))
            )
            if branch.left is not None:
                graph.edges.append((fiber_ids[(i - 1, branch.left)], v))
            if branch.right is not None:
                graph.edges.append((v, fiber_ids[(i, branch.right)]))
    graph.vertices, graph.edges = _column_order(graph)
    logger.debug(f"Planar graph: {len(graph.vertices)} vertices, {len(graph.edges)} edges")
    return graph


def _column_order(graph: PlanarGraph) -> Tuple[List[GraphVertex], List[Tuple[int, int]]]:
    order = sorted(range(len(graph.vertices)),
                   key=lambda v: (graph.vertices[v].column, graph.vertices[v].index))
    renumber = {old: new for new, old in enumerate(order)}
    vertices = [graph.vertices[v] for v in order]
    edges = sorted((min(renumber[a], renumber[b]), max(renumber[a], renumber[b]))
                   for a, b in graph.edges)
    return vertices, edges
