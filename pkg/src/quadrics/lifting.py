"""
Lifting
Points of P1 above planar points, their exact membership in P2 and P3, and the spatial graph
obtained by lifting the arrangement of the common cut curve
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from src.arith.polynomial import MPoly
from src.core.errors import InvariantBreach
from src.quadrics.prepare import PreparedTriple
from src.roots.values import QuadraticRoot, Value, exact_point
from src.subresultants.sequence import SignedSubresultantSequence
from src.topology.arrangement import PlanarArrangement
from src.topology.graph import component_labels, planar_graph
from src.topology.points import PlanePoint

logger = logging.getLogger(__name__)


@dataclass
class SpatialPoint:
    """
    A point of the intersection

    ``coordinates`` are in the input frame. ``slot`` is the root of P1 it lies on above its
    projection: -1 lower, +1 upper, 0 double. ``kind`` is "isolated", "critical" or "sample".
    """
    coordinates: Tuple[Value, Value, Value]
    slot: int
    kind: str = "isolated"
    plane: Optional[PlanePoint] = field(default=None, repr=False)

    def exact(self) -> Optional[Tuple[Fraction, ...]]:
        return exact_point(self.coordinates)


@dataclass
class SpatialGraph:
    vertices: List[SpatialPoint] = field(default_factory=list)
    edges: List[Tuple[int, int]] = field(default_factory=list)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def component_labels(self) -> np.ndarray:
        return component_labels(len(self.vertices), self.edges)

    @property
    def component_count(self) -> int:
        labels = self.component_labels()
        return int(labels.max()) + 1 if labels.size else 0

    @property
    def is_empty(self) -> bool:
        return not self.vertices


ALL = "all"


class QuadricFiber:
    """
    A quadric P = a X3^2 + b X3 + c seen above the plane, with a > 0 after a sign flip

    ``flip`` is -1 when P was negated. D = b^2 - 4ac decides the roots above a point: none,
    a double root (slot 0) or two simple roots (slots -1 below +1).
    """

    def __init__(self, poly: MPoly):
        c, b, a = poly.coefficients_in(2)
        self.flip = -1 if a.constant_value() < 0 else 1
        self.poly = poly * self.flip
        self.a = a.constant_value() * self.flip
        self.b = b * self.flip
        self.c = c * self.flip
        self.disc = self.b * self.b - self.c * (4 * self.a)

    def slots(self, point: PlanePoint) -> List[int]:
        s = point.sign(self.disc)
        if s < 0:
            return []
        if s == 0:
            return [0]
        return [-1, 1]

    def root(self, point: PlanePoint, slot: int) -> Value:
        z = QuadraticRoot(self.a, self.b, self.disc, slot, (point.x, point.y))
        known = z.exact()
        return z if known is None else known

    def slot_of(self, point: PlanePoint, ladder: SignedSubresultantSequence, s1: int) -> int:
        """Slot of the common root -r0/r1 of a pair containing this quadric (r1 != 0)"""
        w = self.b * ladder.principal(1) - ladder.coefficient(1, 0) * (2 * self.a)
        return point.sign(w) * s1


def shared_roots(
    point: PlanePoint,
    ladder: SignedSubresultantSequence,
    first: QuadricFiber,
    second: QuadricFiber,
    slots: Optional[Tuple[List[int], List[int]]] = None,
) -> Union[None, str, Tuple[int, int]]:
    """
    The real root two quadrics share above a point

    ``slots`` may carry the slots of both quadrics above the point when already known.

    Returns:
        None when they share none, ALL when they coincide on the fiber, otherwise the slot of
        the shared root in each quadric
    """
    if point.sign(ladder.resultant) != 0:
        return None
    if slots is None:
        slots = first.slots(point), second.slots(point)
    if not slots[0] or not slots[1]:
        return None
    s1 = point.sign(ladder.principal(1))
    if s1 == 0:
        return ALL
    first_slot = 0 if slots[0] == [0] else first.slot_of(point, ladder, s1)
    second_slot = 0 if slots[1] == [0] else second.slot_of(point, ladder, s1)
    return first_slot, second_slot


class Lifter:
    """Lifting of planar points onto P1, filtered by P2 and P3, in the plane sheared by t"""

    def __init__(self, triple: PreparedTriple, t: int = 0):
        self.triple = triple.sheared(t)
        self.shear = t
        self.fibers = [QuadricFiber(p) for p in self.triple.polys]

    def slots(self, point: PlanePoint, on_sil: Optional[bool] = None) -> List[int]:
        """Roots of P1 above the point, as slots"""
        if on_sil:
            return [0]
        return self.fibers[0].slots(point)

    def is_member(self, point: PlanePoint, k: int, slot: int) -> bool:
        """Whether the slot's root of P1 is also a root of P_{k+1}"""
        shared = shared_roots(point, self.triple.ladder(k), self.fibers[0], self.fibers[k])
        if shared is None:
            return False
        return shared == ALL or shared[0] == slot

    def members(self, point: PlanePoint, on_sil: Optional[bool] = None) -> List[int]:
        return [
            slot for slot in self.slots(point, on_sil)
            if self.is_member(point, 1, slot) and self.is_member(point, 2, slot)
        ]

    def coordinates(self, point: PlanePoint, slot: int) -> Tuple[Value, Value, Value]:
        """Input-frame coordinates of the slot's root above the point"""
        z = self.fibers[0].root(point, slot)
        return self.triple.change.to_original((point.x, point.y, z))

    def lift(
        self, point: PlanePoint, on_sil: Optional[bool] = None, kind: str = "isolated"
    ) -> List[SpatialPoint]:
        return [
            SpatialPoint(self.coordinates(point, slot), slot, kind, point)
            for slot in self.members(point, on_sil)
        ]


def lift_point(
    triple: PreparedTriple, point: PlanePoint, on_sil: Optional[bool] = None
) -> List[SpatialPoint]:
    """
    Points of the intersection above a planar point

    Args:
        triple: the prepared triple
        point: planar point in the frame sheared by ``point.shear``
        on_sil: True when the point is known to lie on Sil(P1)

    Returns:
        zero, one or two points, lowest first
    """
    return Lifter(triple, point.shear).lift(point, on_sil)


def lift_curve(
    triple: PreparedTriple, arrangement: PlanarArrangement
) -> Tuple[SpatialGraph, List[SpatialPoint]]:
    """
    Lift the arrangement of Zer(G) onto the intersection

    Every planar vertex gets the slots of P1 that lie on P2 and P3. A band branch in slot s joins
    the slot s of each neighbouring fiber point, or its double root when P1 has one there.

    Returns:
        the spatial graph, and the fiber lifts with no incident edge (isolated points)

    Raises:
        InvariantBreach: a lifted branch finds no lifted endpoint
    """
    lifter = Lifter(triple, arrangement.shear)
    plane = planar_graph(arrangement)
    lifted: List[SpatialPoint] = []
    ids: Dict[Tuple[int, int], int] = {}
    for v, vertex in enumerate(plane.vertices):
        kind = "critical" if vertex.kind == "fiber" else "sample"
        for spatial in lifter.lift(vertex.point, kind=kind):
            ids[(v, spatial.slot)] = len(lifted)
            lifted.append(spatial)

    edges: List[Tuple[int, int]] = []
    for u, v in plane.edges:
        band, fiber = (u, v) if plane.vertices[u].kind == "band" else (v, u)
        for slot in (-1, 0, 1):
            if (band, slot) not in ids:
                continue
            target = slot if (fiber, slot) in ids else 0
            if (fiber, target) not in ids:
                raise InvariantBreach(f"lifted branch in slot {slot} has no lifted endpoint")
            a, b = ids[(band, slot)], ids[(fiber, target)]
            edges.append((min(a, b), max(a, b)))

    used = {i for edge in edges for i in edge}
    isolated = [p for i, p in enumerate(lifted) if i not in used and p.kind == "critical"]
    keep = [i for i, p in enumerate(lifted) if i in used or p.kind != "critical"]
    renumber = {old: new for new, old in enumerate(keep)}
    graph = SpatialGraph(
        [lifted[i] for i in keep],
        sorted((renumber[a], renumber[b]) for a, b in edges),
    )
    for p in isolated:
        p.kind = "isolated"
    logger.info(
        f"Lifted curve: {len(graph.vertices)} vertices, {len(graph.edges)} edges, "
        f"{len(isolated)} isolated points"
    )
    return graph, isolated
