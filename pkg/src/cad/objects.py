"""
Objects and Regions
Ellipsoids and solid ellipsoids as validated objects, and region formulas over them
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix

from src.arith.parser import poly_parse
from src.arith.polynomial import MPoly, to_fraction, to_rational
from src.core.errors import RefusedInputError, RegionSyntaxError
from src.quadrics.prepare import check_quadric, quadratic_form

logger = logging.getLogger(__name__)


class Relation(Enum):
    """Sign condition defining an object or a region atom"""
    ZERO = "=0"
    NONPOSITIVE = "<=0"

    def holds(self, sign: int) -> bool:
        return sign == 0 if self is Relation.ZERO else sign <= 0

    @classmethod
    def parse(cls, text: str) -> "Relation":
        for relation in cls:
            if text.replace(" ", "") == relation.value:
                return relation
        raise RegionSyntaxError(f"unknown relation '{text}'")


@dataclass(frozen=True)
class ObjectDescriptor:
    """
    A validated object: an ellipsoid (relation =0) or a solid ellipsoid (relation <=0)

    ``center`` is the point where the quadratic part is completed to a square and ``level`` the
    value of the polynomial there (negative for a proper ellipsoid).
    """
    poly: MPoly
    relation: Relation
    center: Tuple[Fraction, Fraction, Fraction]
    level: Fraction
    kind: str = "ellipsoid"

    @property
    def text(self) -> str:
        return f"{self.poly.to_text()} {self.relation.value}"


def _leading_minors(form) -> List[Fraction]:
    matrix = Matrix(3, 3, lambda i, j: to_rational(form[i, j]))
    return [to_fraction(matrix[:k, :k].det()) for k in (1, 2, 3)]


def _completed_square(poly: MPoly, form) -> Tuple[Tuple[Fraction, ...], Fraction]:
    gradient = Matrix(3, 1, lambda i, _: -to_rational(_linear_coefficient(poly, i)))
    matrix = Matrix(3, 3, lambda i, j: 2 * to_rational(form[i, j]))
    center = tuple(to_fraction(v) for v in matrix.LUsolve(gradient))
    level = poly.evaluate({0: center[0], 1: center[1], 2: center[2]}).constant_value()
    return center, level


def _linear_coefficient(poly: MPoly, index: int) -> Fraction:
    exponent = tuple(1 if i == index else 0 for i in range(3))
    return poly.terms().get(exponent, Fraction(0))


def validate_object(
    poly: MPoly, relation: Relation, index: int = 0, admit_definite: bool = False
) -> ObjectDescriptor:
    """
    Check that an object is a nonempty ellipsoid or solid ellipsoid

    The quadratic part must be definite. For the equation a negative definite form is negated;
    for the inequality it would describe an unbounded set and is refused. The completed square
    P = (x - c)^T A (x - c) + k must have k < 0; k = 0 (a single point) is admitted only with
    ``admit_definite``.

    Raises:
        RefusedInputError: classification "degree", "single plane", "indefinite" or "empty"
    """
    check_quadric(index, poly)
    form = quadratic_form(poly)
    minors = _leading_minors(form)
    if not all(m > 0 for m in minors):
        negated = [m * (-1) ** (k + 1) for k, m in enumerate(minors)]
        if not all(m > 0 for m in negated):
            raise RefusedInputError(
                "indefinite", f"object {index + 1}: quadratic part not definite"
            )
        if relation is Relation.NONPOSITIVE:
            raise RefusedInputError("indefinite", f"object {index + 1}: unbounded solid")
        poly = -poly
        form = quadratic_form(poly)

    center, level = _completed_square(poly, form)
    kind = "ellipsoid"
    if level > 0:
        raise RefusedInputError("empty", f"object {index + 1} has no real points")
    if level == 0:
        if not admit_definite:
            raise RefusedInputError("empty", f"object {index + 1} is a single point")
        kind = "point"
    logger.debug(f"Object {index + 1}: {kind} centered at {tuple(str(c) for c in center)}")
    return ObjectDescriptor(poly, relation, center, level, kind)


_OBJECT_LINE = re.compile(r"^(?P<poly>.*?)\s*(?P<relation><=\s*0|=\s*0)\s*$")


def parse_object_line(
    line: str, index: int = 0, admit_definite: bool = False
) -> ObjectDescriptor:
    """Parse 'polynomial =0' or 'polynomial <=0' and validate it"""
    match = _OBJECT_LINE.match(line.strip())
    if match is None:
        raise RegionSyntaxError(f"object line {index + 1} lacks a '=0' or '<=0' suffix")
    relation = Relation.parse(match.group("relation"))
    return validate_object(poly_parse(match.group("poly")), relation, index, admit_definite)


@dataclass(frozen=True)
class Atom:
    """P_index (1-based) in relation to zero"""
    index: int
    relation: Relation

    def __str__(self) -> str:
        return f"{self.index}{self.relation.value}"


@dataclass(frozen=True)
class Region:
    """A union of conjunctions of atoms, e.g. '1=0,2<=0 | 3=0'"""
    clauses: Tuple[Tuple[Atom, ...], ...]

    def holds(self, signs: Sequence[int]) -> bool:
        """Truth at a cell from the signs of the polynomials (0-based positions)"""
        return any(
            all(atom.relation.holds(signs[atom.index - 1]) for atom in clause)
            for clause in self.clauses
        )

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(sorted({a.index for clause in self.clauses for a in clause}))

    def __str__(self) -> str:
        return " | ".join(",".join(str(a) for a in clause) for clause in self.clauses)

    @classmethod
    def parse(cls, text: str, count: Optional[int] = None) -> "Region":
        """
        Parse a region formula

        Args:
            text: clauses separated by '|', atoms within a clause by ','
            count: number of polynomials, to check the indices

        Raises:
            RegionSyntaxError: malformed formula or index out of range
        """
        clauses = []
        for part in text.split("|"):
            atoms = []
            for item in part.split(","):
                match = re.fullmatch(r"\s*(\d+)\s*(<=\s*0|=\s*0)\s*", item)
                if match is None:
                    raise RegionSyntaxError(f"cannot read atom '{item.strip()}'")
                index = int(match.group(1))
                if index < 1 or (count is not None and index > count):
                    raise RegionSyntaxError(f"polynomial index {index} out of range")
                atoms.append(Atom(index, Relation.parse(match.group(2))))
            clauses.append(tuple(atoms))
        return cls(tuple(clauses))

    @classmethod
    def conjunction(cls, atoms: Sequence[Atom]) -> "Region":
        return cls((tuple(atoms),))
