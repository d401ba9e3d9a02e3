"""
Planar Arrangements
Cylindrical decomposition of the plane adapted to a family of curves

The decomposition alternates bands (open vertical strips with a rational sample abscissa) and
critical fibers (vertical lines above the real roots of the discriminants and pairwise
resultants). Curves are put in generic position first: each curve X2-regular, the curves
pairwise coprime, and above every critical abscissa a single point where something happens.
That point, y_c, is computed exactly from a subresultant ladder; every other fiber point is a
simple root of its curve and is isolated numerically.

Main curves are drawn (they get fiber points and band branches). Auxiliary curves only
contribute the abscissas where they meet a main curve, and mark those points.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple

from src.arith.polynomial import MPoly, gcd_free_basis, polynomial_gcd
from src.core.errors import CommonFactorError, InvariantBreach, NotGenericError, ShearBudgetExceeded
from src.roots.algebraic import (
    AlgebraicNumber,
    compare,
    isolate_real_roots,
    sample_between,
    sign_at,
)
from src.roots.fiber import (
    count_real_roots_in_fiber,
    discriminant_ladder,
    fiber_roots_at_rational,
    isolate_fiber_roots,
)
from src.roots.values import CriticalOrdinate, Value, compare_distinct, exact_of
from src.subresultants.sequence import (
    SignedSubresultantSequence,
    gcd_degree_at,
    has_single_root,
    shared_root_y,
    signed_subresultants,
)
from src.topology.points import PlanePoint
from src.topology.shear import shear

logger = logging.getLogger(__name__)

DEFAULT_SHEAR_BUDGET = 32


@dataclass
class Source:
    """A discriminant or a pair of curves whose resultant yields critical abscissas"""
    curves: Tuple[int, ...]
    aux: Optional[int]
    ladder: SignedSubresultantSequence
    resultant: MPoly

    @property
    def kind(self) -> str:
        if len(self.curves) == 2:
            return "pair"
        return "discriminant" if self.aux is None else "auxiliary"


@dataclass
class FiberPoint:
    """A point of a critical fiber and the main curves through it"""
    y: Value
    curves: Tuple[int, ...]
    critical: bool = False
    aux: Tuple[int, ...] = ()


@dataclass
class Fiber:
    """The critical fiber above x; ``critical_index`` locates y_c (0-based)"""
    x: AlgebraicNumber
    points: List[FiberPoint]
    critical_index: Optional[int]
    kinds: Tuple[str, ...] = ()

    def positions_of(self, curve: int) -> List[int]:
        return [k for k, p in enumerate(self.points) if curve in p.curves]


@dataclass
class Branch:
    """A root of one curve above a band sample, linked to the neighbouring fiber points"""
    curve: int
    y: AlgebraicNumber
    left: Optional[int] = None
    right: Optional[int] = None


@dataclass
class Band:
    sample: Fraction
    branches: List[Branch]

    def branches_of(self, curve: int) -> List[int]:
        return [k for k, b in enumerate(self.branches) if b.curve == curve]


@dataclass
class PlanarArrangement:
    """
    Decomposition of the plane adapted to the (sheared) main and auxiliary curves

    ``bands[i]`` lies left of ``fibers[i]``; there is one more band than fibers. Cell labels
    follow the column numbering 1..2r+1 with odd columns for bands and even ones for fibers.
    """
    curves: List[MPoly]
    aux: List[MPoly]
    shear: int
    bands: List[Band]
    fibers: List[Fiber]
    sources: List[Source] = field(default_factory=list, repr=False)

    @property
    def abscissas(self) -> List[AlgebraicNumber]:
        return [f.x for f in self.fibers]

    def fiber_point(self, i: int, k: int) -> PlanePoint:
        fiber = self.fibers[i]
        return PlanePoint(fiber.x, fiber.points[k].y, self.shear, ("fiber",))

    def band_point(self, i: int, k: int) -> PlanePoint:
        band = self.bands[i]
        x = AlgebraicNumber.from_rational(band.sample, "x1")
        return PlanePoint(x, band.branches[k].y, self.shear, ("band",))

    def column_count(self) -> int:
        return 2 * len(self.fibers) + 1


def arrange(
    mains: Sequence[MPoly],
    aux: Sequence[MPoly] = (),
    budget: int = DEFAULT_SHEAR_BUDGET,
    start: int = 0,
) -> PlanarArrangement:
    """
    Arrangement of bivariate curves, shearing until generic position holds

    Args:
        mains: square-free, pairwise coprime curves to decompose
        aux: curves coprime to every main curve whose intersections with them are marked
        budget: number of shears t = start, start + 1, ... to try
        start: first shear of the schedule

    Raises:
        CommonFactorError: two curves share a component
        ShearBudgetExceeded: no shear of the schedule gives generic position
    """
    attempted: List[int] = []
    last: Optional[NotGenericError] = None
    for t in range(start, start + budget):
        attempted.append(t)
        try:
            arrangement = arrange_sheared(mains, aux, t)
        except NotGenericError as error:
            logger.info(f"Shear t={t} rejected: {error}")
            last = error
            continue
        if t != start:
            logger.info(f"Generic position reached with shear t={t}")
        return arrangement
    raise ShearBudgetExceeded(attempted, last)


def arrange_sheared(mains: Sequence[MPoly], aux: Sequence[MPoly], t: int) -> PlanarArrangement:
    """
    Arrangement in the frame sheared by t

    Raises:
        NotGenericError: the sheared curves are not in generic position
    """
    curves = [shear(h, t) for h in mains]
    extra = [shear(g, t) for g in aux]
    for poly in curves + extra:
        if poly.degree(2) > 0:
            raise ValueError(f"{poly.to_text()} is not a plane curve")
        if not poly.is_regular_in(1):
            raise NotGenericError("regularity", poly.to_text())

    sources = _sources(curves, extra)
    critical = _critical_abscissas(sources)
    fibers = [_fiber(curves, x, vanishing) for x, vanishing in critical]
    samples = sample_between([f.x for f in fibers])
    bands = [_band(curves, s) for s in samples]
    for i, fiber in enumerate(fibers):
        for curve in range(len(curves)):
            _link(fiber, bands[i], curve, side="left")
            _link(fiber, bands[i + 1], curve, side="right")
    logger.debug(f"Arrangement of {len(curves)} curves: {len(fibers)} critical fibers")
    return PlanarArrangement(curves, extra, t, bands, fibers, sources)


def _pair_source(curves: Tuple[int, ...], aux: Optional[int], p: MPoly, q: MPoly) -> Source:
    ladder = signed_subresultants(p, q, 1)
    resultant = ladder.resultant
    if resultant.is_zero:
        raise CommonFactorError("curves share a component", polynomial_gcd(p, q))
    return Source(curves, aux, ladder, resultant)


def _sources(curves: List[MPoly], extra: List[MPoly]) -> List[Source]:
    sources: List[Source] = []
    for i, h in enumerate(curves):
        if h.degree(1) >= 2:
            ladder = discriminant_ladder(h)
            sources.append(Source((i,), None, ladder, ladder.resultant))
    for i, h in enumerate(curves):
        for j in range(i + 1, len(curves)):
            sources.append(_pair_source((i, j), None, h, curves[j]))
        for k, g in enumerate(extra):
            sources.append(_pair_source((i,), k, h, g))
    return sources


def _critical_abscissas(sources: List[Source]) -> List[Tuple[AlgebraicNumber, List[Source]]]:
    roots: List[Tuple[AlgebraicNumber, List[Source]]] = []
    for element in gcd_free_basis(s.resultant for s in sources):
        vanishing = [s for s in sources if element.divides(s.resultant)]
        for x in isolate_real_roots(element, var="x1"):
            roots.append((x, vanishing))
    roots.sort(key=cmp_to_key(lambda u, v: compare(u[0], v[0])))
    return roots


def _same_ordinate(a: CriticalOrdinate, b: CriticalOrdinate, x: AlgebraicNumber) -> bool:
    return sign_at(a.num * b.den - b.num * a.den, x) == 0


def _critical_ordinate(x: AlgebraicNumber, vanishing: List[Source]) -> CriticalOrdinate:
    ordinates: List[CriticalOrdinate] = []
    for source in vanishing:
        j = gcd_degree_at(source.ladder, x)
        if j == 0:
            raise InvariantBreach("resultant root with a trivial gcd above it")
        if not has_single_root(source.ladder, j, x):
            raise NotGenericError("single-critical-point", f"{source.kind} gcd of degree {j}")
        ordinates.append(shared_root_y(source.ladder, j, x))
    y_c = ordinates[0]
    for other in ordinates[1:]:
        if not _same_ordinate(y_c, other, x):
            raise NotGenericError("single-critical-point", "two critical points in one fiber")
    return y_c


def _fiber(curves: List[MPoly], x: AlgebraicNumber, vanishing: List[Source]) -> Fiber:
    y_c = _critical_ordinate(x, vanishing)
    through = sorted({i for s in vanishing for i in s.curves})
    aux_through = tuple(sorted({s.aux for s in vanishing if s.aux is not None}))
    kinds = tuple(sorted({s.kind for s in vanishing}))

    found: List[Tuple[Value, int]] = []
    if x.is_rational:
        y_exact = exact_of(y_c)
        for i, h in enumerate(curves):
            for y in fiber_roots_at_rational(h, x.lo):
                if i in through and compare(y, y_exact) == 0:
                    continue
                found.append((y, i))
        y_value: Value = y_exact
    else:
        for i, h in enumerate(curves):
            n = count_real_roots_in_fiber(h, x)
            target = n - (1 if i in through else 0)
            for y in isolate_fiber_roots(h, x, target, exclude=y_c):
                found.append((y, i))
        y_value = y_c

    points = [FiberPoint(y, (i,)) for y, i in found]
    points.append(FiberPoint(y_value, tuple(through), True, aux_through))
    points.sort(key=cmp_to_key(lambda a, b: _compare_values(a.y, b.y)))
    critical_index = next(k for k, p in enumerate(points) if p.critical)
    return Fiber(x, points, critical_index, kinds)


def _compare_values(u: Value, v: Value) -> int:
    if isinstance(u, AlgebraicNumber) and isinstance(v, AlgebraicNumber):
        return compare(u, v)
    if isinstance(u, AlgebraicNumber) and exact_of(v) is not None:
        return compare(u, exact_of(v))
    if isinstance(v, AlgebraicNumber) and exact_of(u) is not None:
        return compare(exact_of(u), v)
    return compare_distinct(u, v)


def _band(curves: List[MPoly], sample: Fraction) -> Band:
    branches = [
        Branch(i, y) for i, h in enumerate(curves) for y in fiber_roots_at_rational(h, sample)
    ]
    branches.sort(key=cmp_to_key(lambda a, b: compare(a.y, b.y)))
    return Band(sample, branches)


def _link(fiber: Fiber, band: Band, curve: int, side: str) -> None:
    """
    Attach the branches of one curve in a band to the points of the neighbouring fiber

    Points of the curve other than y_c are regular, so they receive one branch each, in
    vertical order. Whatever is left in between converges to y_c.
    """
    positions = fiber.positions_of(curve)
    branches = band.branches_of(curve)
    critical = fiber.critical_index if fiber.critical_index in positions else None
    if critical is None:
        if len(branches) != len(positions):
            raise InvariantBreach(
                f"curve {curve}: {len(branches)} branches against {len(positions)} fiber points"
            )
        targets = positions
    else:
        below = [p for p in positions if p < critical]
        above = [p for p in positions if p > critical]
        middle = len(branches) - len(below) - len(above)
        if middle < 0:
            raise InvariantBreach(f"curve {curve}: too few branches next to a critical fiber")
        targets = below + [critical] * middle + above
    for k, target in zip(branches, targets):
        if side == "left":
            band.branches[k].right = target
        else:
            band.branches[k].left = target
