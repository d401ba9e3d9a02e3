"""
Cylindrical Decomposition
Decomposition of space adapted to one, two or three quadrics. Cells carry labels (i), (i, j)
and (i, j, k) counted from the bottom of their stack, a sample point in the decomposition frame
and the signs of the polynomials of their level.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import ceil, floor
from typing import Dict, List, Optional, Sequence, Tuple

from src.arith.polynomial import MPoly, gcd_free_basis
from src.core.errors import InvariantBreach
from src.quadrics.lifting import ALL, QuadricFiber, shared_roots
from src.quadrics.prepare import CoordinateChange, check_pair, check_quadric, regularize
from src.roots import algebraic
from src.roots.algebraic import AlgebraicNumber, sign_at
from src.roots.values import Value, bounds_of, compare_distinct, exact_of, refine_value
from src.subresultants.sequence import SignedSubresultantSequence, signed_subresultants
from src.topology.arrangement import (
    DEFAULT_SHEAR_BUDGET,
    PlanarArrangement,
    arrange,
    arrange_sheared,
)
from src.topology.graph import component_labels
from src.topology.points import PlanePoint

from .objects import Region

logger = logging.getLogger(__name__)

Label = Tuple[int, ...]


@dataclass
class StackNode:
    """A root above a plane cell with the (surface, slot) pairs vanishing there"""
    members: Tuple[Tuple[int, int], ...]
    z: Value

    @property
    def surfaces(self) -> Tuple[int, ...]:
        return tuple(s for s, _ in self.members)

    def contains(self, surface: int, slot: int) -> bool:
        return (surface, slot) in self.members


@dataclass
class Cell:
    """
    A cell of the decomposition

    ``signs`` are taken at ``sample`` for the factors of the cell's level: the level-1 basis,
    the level-2 basis, or the input polynomials at level 3. Plane cells also keep their
    sample as a ``point`` and, once lifted, the ``nodes`` of the stack above them.
    """
    label: Label
    dimension: int
    sample: Tuple[Value, ...]
    signs: Tuple[int, ...]
    curves: Tuple[int, ...] = ()
    point: Optional[PlanePoint] = field(default=None, repr=False)
    nodes: Optional[List[StackNode]] = field(default=None, repr=False)

    @property
    def level(self) -> int:
        return len(self.label)


@dataclass
class CadResult:
    """
    Cells of every level, the arrangement of level 2 and the frame they live in

    ``change`` maps the decomposition frame to the input frame: original = change . sample.
    ``complete`` is False when stacks were built above the plane 0- and 1-cells only.
    """
    polys: Tuple[MPoly, ...]
    surfaces: Tuple[MPoly, ...]
    change: CoordinateChange
    arrangement: PlanarArrangement
    factors: Dict[int, List[MPoly]]
    cells: Dict[int, List[Cell]]
    complete: bool = True
    _index: Dict[Label, Cell] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {c.label: c for level in self.cells.values() for c in level}

    @property
    def shear(self) -> int:
        return self.arrangement.shear

    @property
    def counts(self) -> Dict[int, int]:
        return {level: len(cells) for level, cells in self.cells.items()}

    def cell(self, label: Label) -> Cell:
        return self._index[tuple(label)]

    def abscissa(self, column: int) -> Value:
        """x of a level-1 label: a band sample (odd) or a critical abscissa (even)"""
        return self.cell((column,)).sample[0]

    def original(self, sample: Sequence[Value]) -> Tuple[Value, ...]:
        return self.change.to_original(sample)

    def truth(self, region: Region, max_dimension: int = 3) -> Dict[Label, bool]:
        """Truth of the region on the level-3 cells of dimension at most ``max_dimension``"""
        return {
            c.label: region.holds(c.signs)
            for c in self.cells.get(3, [])
            if c.dimension <= max_dimension
        }

    def dump_lines(self) -> List[str]:
        lines = [f"level 1: {f.to_text()}" for f in self.factors[1]]
        lines += [f"level 2: {g.to_text()}" for g in self.factors[2]]
        lines += [f"level 3: {p.to_text()}" for p in self.factors[3]]
        return lines


def rational_between(lower: Optional[Value], upper: Optional[Value]) -> Fraction:
    """
    A simple rational strictly between two values, either side possibly unbounded

    Unbounded on both sides gives 0; below a value floor(lo) - 1; above it ceil(hi) + 1.
    Between two values: 0 when the gap contains it, else an integer in the gap, else the
    midpoint of the separated bounds.
    """
    if lower is None and upper is None:
        return Fraction(0)
    if lower is None:
        return Fraction(floor(bounds_of(upper)[0]) - 1)
    if upper is None:
        return Fraction(ceil(bounds_of(lower)[1]) + 1)
    for _ in range(algebraic.REFINEMENT_LIMIT):
        lo, hi = bounds_of(lower)[1], bounds_of(upper)[0]
        if lo < hi:
            break
        lower_lo, _ = bounds_of(lower)
        _, upper_hi = bounds_of(upper)
        if exact_of(upper) is not None or lo - lower_lo >= upper_hi - hi:
            refine_value(lower)
        else:
            refine_value(upper)
    else:
        raise InvariantBreach("neighbouring stack values could not be separated")
    if lo < 0 < hi:
        return Fraction(0)
    candidate = Fraction(floor(lo) + 1)
    if candidate < hi:
        return candidate
    return (lo + hi) / 2


def gap_samples(values: Sequence[Value]) -> List[Fraction]:
    """One rational in each gap cut out by increasing values, unbounded gaps included"""
    bounded: List[Optional[Value]] = [None] + list(values) + [None]
    return [rational_between(a, b) for a, b in zip(bounded, bounded[1:])]


def projection_factors(polys: Sequence[MPoly]) -> List[MPoly]:
    """
    Level-2 basis: silhouettes, pairwise cut curves and the first subresultant coefficients of
    each pair, made square-free and pairwise coprime
    """
    candidates = [QuadricFiber(p).disc.canonical() for p in polys]
    for p, q in combinations(polys, 2):
        ladder = signed_subresultants(p, q, "x3")
        candidates.append(ladder.resultant.canonical())
        candidates.append(ladder.principal(1))
    return gcd_free_basis(candidates)


class _Lifting:
    """Stacks above plane points for the sheared surfaces"""

    def __init__(self, surfaces: Sequence[MPoly]):
        self.fibers = [QuadricFiber(p) for p in surfaces]
        self.ladders: Dict[Tuple[int, int], SignedSubresultantSequence] = {
            (i, j): signed_subresultants(surfaces[i], surfaces[j], "x3")
            for i, j in combinations(range(len(surfaces)), 2)
        }

    def nodes(self, point: PlanePoint) -> List[StackNode]:
        slots = [fiber.slots(point) for fiber in self.fibers]
        entries = [(s, slot) for s, found in enumerate(slots) for slot in found]
        ids = {entry: n for n, entry in enumerate(entries)}
        edges = []
        for (i, j), ladder in self.ladders.items():
            if not slots[i] or not slots[j]:
                continue
            shared = shared_roots(
                point, ladder, self.fibers[i], self.fibers[j], (slots[i], slots[j])
            )
            if shared is None:
                continue
            pairs = list(zip(slots[i], slots[j])) if shared == ALL else [shared]
            for a, b in pairs:
                if (i, a) not in ids or (j, b) not in ids:
                    raise InvariantBreach(f"shared root in a missing slot of P{i + 1}, P{j + 1}")
                edges.append((ids[(i, a)], ids[(j, b)]))

        labels = component_labels(len(entries), edges)
        groups: Dict[int, List[Tuple[int, int]]] = {}
        for entry, label in zip(entries, labels):
            groups.setdefault(int(label), []).append(entry)
        nodes = [self._node(point, members) for members in groups.values()]
        nodes.sort(key=cmp_to_key(lambda u, v: compare_distinct(u.z, v.z)))
        return nodes

    def _node(self, point: PlanePoint, members: List[Tuple[int, int]]) -> StackNode:
        values = [self.fibers[s].root(point, slot) for s, slot in members]
        z = next((v for v in values if exact_of(v) is not None), values[0])
        return StackNode(tuple(sorted(members)), z)

    def sign(self, surface: int, below: int) -> int:
        """Sign of an input polynomial given how many of its roots lie below (with multiplicity)"""
        return self.fibers[surface].flip * (1 if below % 2 == 0 else -1)


def _plane_cells(arrangement: PlanarArrangement, column: int) -> List[Cell]:
    """Level-2 cells of one column (0-based), bottom to top, without signs"""
    t = arrangement.shear
    label = column + 1
    cells: List[Cell] = []
    if column % 2 == 0:
        band = arrangement.bands[column // 2]
        x = AlgebraicNumber.from_rational(band.sample, "x1")
        samples = gap_samples([b.y for b in band.branches])
        for k, branch in enumerate(band.branches):
            cells.append(Cell((label, 2 * k + 1), 2, (x, samples[k]), (),
                              point=PlanePoint(x, samples[k], t, ("sector",))))
            point = arrangement.band_point(column // 2, k)
            cells.append(Cell((label, 2 * k + 2), 1, (x, point.y), (), (branch.curve,), point))
        cells.append(Cell((label, 2 * len(band.branches) + 1), 2, (x, samples[-1]), (),
                          point=PlanePoint(x, samples[-1], t, ("sector",))))
        return cells

    fiber = arrangement.fibers[column // 2]
    ys = gap_samples([p.y for p in fiber.points])
    for k, fiber_point in enumerate(fiber.points):
        y = ys[k]
        cells.append(Cell((label, 2 * k + 1), 1, (fiber.x, y), (),
                          point=PlanePoint(fiber.x, y, t, ("interval",))))
        point = arrangement.fiber_point(column // 2, k)
        cells.append(Cell((label, 2 * k + 2), 0, (fiber.x, point.y), (), fiber_point.curves, point))
    y = ys[-1]
    cells.append(Cell((label, 2 * len(fiber.points) + 1), 1, (fiber.x, y), (),
                      point=PlanePoint(fiber.x, y, t, ("interval",))))
    return cells


def _stack(lifting: _Lifting, plane: Cell) -> List[Cell]:
    """Level-3 cells above one plane cell, bottom to top"""
    nodes = lifting.nodes(plane.point)
    plane.nodes = nodes
    count = len(lifting.fibers)
    below = [0] * count
    cells: List[Cell] = []
    for k in range(2 * len(nodes) + 1):
        label = plane.label + (k + 1,)
        if k % 2 == 0:
            lower = nodes[k // 2 - 1].z if k > 0 else None
            upper = nodes[k // 2].z if k // 2 < len(nodes) else None
            signs = tuple(lifting.sign(s, below[s]) for s in range(count))
            z = rational_between(lower, upper)
            cells.append(Cell(label, plane.dimension + 1, plane.sample + (z,), signs))
            continue
        node = nodes[k // 2]
        signs = tuple(
            0 if s in node.surfaces else lifting.sign(s, below[s]) for s in range(count)
        )
        cells.append(Cell(label, plane.dimension, plane.sample + (node.z,), signs))
        for s, slot in node.members:
            below[s] += 2 if slot == 0 else 1
    return cells


def cad_quadrics(
    polys: Sequence[MPoly],
    shear: Optional[int] = None,
    budget: int = DEFAULT_SHEAR_BUDGET,
    complete: bool = True,
) -> CadResult:
    """
    Cylindrical decomposition adapted to up to three quadrics

    The quadrics are made X3-regular jointly; the level-2 basis is drawn as one planar
    arrangement, and the stack above each plane cell merges the roots the quadrics share.

    Args:
        polys: one, two or three quadrics
        shear: plane shear to use; None searches the schedule from 0
        budget: regularity changes and shears tried
        complete: False lifts only the plane 0- and 1-cells (enough for connectivity)

    Raises:
        RefusedInputError: an input is not a proper quadric, or two inputs share a factor
        NotGenericError: the given shear is not generic
        ShearBudgetExceeded: no shear of the schedule is generic
    """
    if not 1 <= len(polys) <= 3:
        raise ValueError(f"expected one to three quadrics, got {len(polys)}")
    for index, poly in enumerate(polys):
        check_quadric(index, poly)
    for i, j in combinations(range(len(polys)), 2):
        check_pair(i, j, polys[i], polys[j])
    regular, change = regularize(polys, budget)

    mains = projection_factors(regular)
    if shear is None:
        arrangement = arrange(mains, [], budget)
    else:
        arrangement = arrange_sheared(mains, [], shear)
    plane_shear = CoordinateChange.plane_shear(arrangement.shear)
    surfaces = tuple(plane_shear.apply(p) for p in regular)

    level1 = gcd_free_basis(s.resultant for s in arrangement.sources)
    cells: Dict[int, List[Cell]] = {1: [], 2: [], 3: []}
    for column in range(arrangement.column_count()):
        if column % 2 == 0:
            x: Value = arrangement.bands[column // 2].sample
        else:
            x = arrangement.fibers[column // 2].x
        signs = tuple(sign_at(f, x) for f in level1)
        cells[1].append(Cell((column + 1,), 1 - column % 2, (x,), signs))
        for plane in _plane_cells(arrangement, column):
            plane.signs = tuple(
                0 if g in plane.curves else plane.point.sign(curve)
                for g, curve in enumerate(arrangement.curves)
            )
            cells[2].append(plane)

    lifting = _Lifting(surfaces)
    for plane in cells[2]:
        if complete or plane.dimension < 2:
            cells[3].extend(_stack(lifting, plane))

    result = CadResult(
        tuple(polys),
        surfaces,
        change.compose(plane_shear),
        arrangement,
        {1: level1, 2: list(arrangement.curves), 3: list(surfaces)},
        cells,
        complete,
    )
    logger.info(
        f"CAD of {len(polys)} quadrics with shear t={arrangement.shear}: "
        f"{len(cells[1])}/{len(cells[2])}/{len(cells[3])} cells"
    )
    return result
