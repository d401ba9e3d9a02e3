"""
Preparation of Quadric Triples
Degree and degeneracy checks, and the coordinate change that makes every input X3-regular
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from src.arith.polynomial import MPoly, polynomial_gcd
from src.core.errors import RefusedInputError, ShearBudgetExceeded
from src.roots.values import LinearValue, Value
from src.subresultants.sequence import SignedSubresultantSequence, signed_subresultants
from src.topology.shear import shear_matrix

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, int, int], Tuple[int, int, int], Tuple[int, int, int]]

IDENTITY: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class CoordinateChange:
    """
    An integer linear change of coordinates: original = matrix . new

    Polynomials are carried to the new frame by P_new(v) = P(matrix . v).
    """
    matrix: Matrix = IDENTITY

    @property
    def is_identity(self) -> bool:
        return self.matrix == IDENTITY

    def compose(self, other: "CoordinateChange") -> "CoordinateChange":
        """This change followed by ``other`` (applied in the new frame)"""
        m = np.array(self.matrix, dtype=object).dot(np.array(other.matrix, dtype=object))
        return CoordinateChange(tuple(tuple(int(v) for v in row) for row in m))

    def apply(self, poly: MPoly) -> MPoly:
        if self.is_identity:
            return poly
        return poly.linear_change(self.matrix)

    def to_original(self, point: Sequence[Value]) -> Tuple[Value, ...]:
        """Coordinates of a point of the new frame in the original one"""
        if self.is_identity:
            return tuple(point)
        coordinates = []
        for row in self.matrix:
            terms = [(c, v) for c, v in zip(row, point) if c != 0]
            if len(terms) == 1 and terms[0][0] == 1:
                coordinates.append(terms[0][1])
            else:
                value = LinearValue(terms)
                known = value.exact()
                coordinates.append(known if known is not None else value)
        return tuple(coordinates)

    @classmethod
    def regularizing(cls, a: int, b: int) -> "CoordinateChange":
        """X1 -> X1 + a X3, X2 -> X2 + b X3"""
        return cls(((1, 0, a), (0, 1, b), (0, 0, 1)))

    @classmethod
    def plane_shear(cls, t: int) -> "CoordinateChange":
        """X1 -> X1 + t X2, the shear of the plane arrangement"""
        return cls(shear_matrix(t))


def regularity_schedule() -> Iterator[Tuple[int, int]]:
    """(0, 0) first, then every (a, b) with max(|a|, |b|) = 1, 2, ... in a fixed order"""
    yield 0, 0
    n = 1
    while True:
        steps = [k for m in range(1, n + 1) for k in (m, -m)]
        for a, b in product([0] + steps, repeat=2):
            if max(abs(a), abs(b)) == n:
                yield a, b
        n += 1


def quadratic_form(poly: MPoly) -> np.ndarray:
    """Symmetric matrix of the degree-two part, with Fraction entries"""
    form = np.zeros((3, 3), dtype=object)
    for exponent, c in poly.terms().items():
        if sum(exponent) != 2:
            continue
        used = [i for i, e in enumerate(exponent) for _ in range(e)]
        i, j = used
        if i == j:
            form[i, i] += c
        else:
            form[i, j] += c / 2
            form[j, i] += c / 2
    return form


def _x3_coefficient(form: np.ndarray, a: int, b: int):
    v = np.array([a, b, 1], dtype=object)
    return v.dot(form).dot(v)


@dataclass
class PreparedTriple:
    """Three X3-regular quadrics in a common frame, with the change that produced it"""
    polys: Tuple[MPoly, MPoly, MPoly]
    change: CoordinateChange = field(default_factory=CoordinateChange)
    originals: Tuple[MPoly, ...] = ()
    _ladders: Dict[int, SignedSubresultantSequence] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.originals:
            self.originals = tuple(self.polys)

    def ladder(self, k: int) -> SignedSubresultantSequence:
        """Subresultant ladder of (P1, Pk) in x3, k = 1 or 2 (0-based)"""
        if k not in self._ladders:
            self._ladders[k] = signed_subresultants(self.polys[0], self.polys[k], "x3")
        return self._ladders[k]

    def transformed(self, change: CoordinateChange) -> "PreparedTriple":
        """The same triple after a further change of coordinates"""
        if change.is_identity:
            return self
        polys = tuple(change.apply(p) for p in self.polys)
        return PreparedTriple(polys, self.change.compose(change), self.originals)

    def sheared(self, t: int) -> "PreparedTriple":
        return self.transformed(CoordinateChange.plane_shear(t))


def check_quadric(index: int, poly: MPoly) -> None:
    if poly.total_degree != 2:
        raise RefusedInputError("degree", f"P{index + 1} has total degree {poly.total_degree}")
    reduced = MPoly(poly.sympy.sqf_part())
    if reduced.total_degree < 2:
        raise RefusedInputError("single plane", f"P{index + 1} is the square of a plane")


def check_pair(i: int, j: int, p: MPoly, q: MPoly) -> None:
    """Refuse two quadrics with a common plane or proportional equations (0-based indices)"""
    common = polynomial_gcd(p, q)
    if common.total_degree == 1:
        raise RefusedInputError("shared plane", f"P{i + 1} and P{j + 1} share {common.to_text()}")
    if common.total_degree == 2:
        raise RefusedInputError("shared surface", f"P{i + 1} and P{j + 1} are proportional")


def _check_pairs(polys: Sequence[MPoly]) -> None:
    for k in (1, 2):
        check_pair(0, k, polys[0], polys[k])


def regularize(
    polys: Sequence[MPoly], budget: int = 32
) -> Tuple[Tuple[MPoly, ...], CoordinateChange]:
    """
    Make every polynomial X3-regular by one joint change X1 -> X1 + a X3, X2 -> X2 + b X3

    (a, b) is the first entry of ``regularity_schedule`` for which every X3^2 coefficient is a
    nonzero constant.

    Raises:
        ShearBudgetExceeded: no change within the budget works
    """
    forms = [quadratic_form(p) for p in polys]
    attempted: List[Tuple[int, int]] = []
    for a, b in regularity_schedule():
        if len(attempted) >= budget:
            break
        attempted.append((a, b))
        if all(_x3_coefficient(form, a, b) != 0 for form in forms):
            change = CoordinateChange.regularizing(a, b)
            if not change.is_identity:
                logger.info(f"X3-regularity reached with X1 -> X1 + {a} X3, X2 -> X2 + {b} X3")
            return tuple(change.apply(p) for p in polys), change
    raise ShearBudgetExceeded(attempted)


def prepare(
    p1: MPoly, p2: MPoly, p3: MPoly, budget: int = 32
) -> PreparedTriple:
    """
    Validate a triple of quadrics and make it X3-regular

    Every input must have total degree two, must not be the square of a plane, and P1 must not
    share a plane or the whole surface with P2 or P3 (P2 and P3 may coincide).

    Raises:
        RefusedInputError: classification "degree", "single plane", "shared plane" or
            "shared surface"
        ShearBudgetExceeded: no change within the budget makes all three X3-regular
    """
    polys = (p1, p2, p3)
    for index, poly in enumerate(polys):
        check_quadric(index, poly)
    _check_pairs(polys)
    regular, change = regularize(polys, budget)
    return PreparedTriple(regular, change, polys)
