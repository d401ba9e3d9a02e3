"""
Sylvester-Habicht Matrices and Resultants
"""

import logging
from typing import List, NamedTuple, Sequence, TypeVar

from src.arith.elimination import bareiss_determinant
from src.arith.matrix import QMatrix
from src.arith.polynomial import MPoly, UPoly, Variable, variable_index
from src.core.errors import DegreeError

logger = logging.getLogger(__name__)

T = TypeVar("T")


def syha_rows(p: Sequence[T], q: Sequence[T], j: int, zero: T) -> List[List[T]]:
    """
    Rows of SyHa_j for coefficient lists given low to high

    Rows are X^{q-j-1}P, ..., XP, P followed by Q, XQ, ..., X^{p-j-1}Q, written in the
    monomial basis X^{p+q-j-1}, ..., X, 1.
    """
    deg_p, deg_q = len(p) - 1, len(q) - 1
    width = deg_p + deg_q - j

    def shifted(coefficients: Sequence[T], shift: int) -> List[T]:
        row = [zero] * width
        for k, c in enumerate(coefficients):
            row[width - 1 - (k + shift)] = c
        return row

    rows = [shifted(p, s) for s in range(deg_q - j - 1, -1, -1)]
    rows += [shifted(q, s) for s in range(deg_p - j)]
    return rows


def _check_degrees(deg_p: int, deg_q: int, j: int) -> None:
    if deg_q < 0 or deg_p < 1:
        raise DegreeError(f"Sylvester-Habicht matrix needs deg P >= 1, got {deg_p}, {deg_q}")
    if deg_q > deg_p:
        raise DegreeError(f"deg Q = {deg_q} exceeds deg P = {deg_p}")
    if not 0 <= j <= deg_q:
        raise DegreeError(f"index {j} outside 0..{deg_q}")


def sylvester_habicht(p: UPoly, q: UPoly, j: int) -> QMatrix:
    """
    The Sylvester-Habicht matrix SyHa_j(P, Q)

    Args:
        p: polynomial of degree p >= 1
        q: polynomial of degree q with 1 <= q <= p
        j: index, 0 <= j <= q

    Returns:
        (p + q - 2j) x (p + q - j) rational matrix

    Raises:
        DegreeError: when the degree preconditions fail
    """
    if q.degree < 1:
        raise DegreeError("Sylvester-Habicht matrix needs deg Q >= 1")
    _check_degrees(p.degree, q.degree, j)
    width = p.degree + q.degree - j
    rows = syha_rows(list(p.coefficients), list(q.coefficients), j, 0)
    return QMatrix.from_rows(rows, n_cols=width)


class Resultant(NamedTuple):
    """det SyHa_0 as computed, and its canonical representative"""
    raw: MPoly
    canonical: MPoly


def determinant(rows: Sequence[Sequence[MPoly]]) -> MPoly:
    return bareiss_determinant(rows, MPoly.exquo, MPoly.zero(), MPoly.constant(1))


def resultant(p: MPoly, q: MPoly, var: Variable) -> Resultant:
    """
    Resultant with respect to var as det SyHa_0(P, Q)

    The pair is used in the given order; SyHa_0 is defined for any two positive degrees.

    Raises:
        DegreeError: either input has degree 0 in var ("constant-degree")
    """
    index = variable_index(var)
    deg_p, deg_q = p.degree(index), q.degree(index)
    if deg_p < 1 or deg_q < 1:
        raise DegreeError(f"constant-degree input to a resultant in x{index + 1}")
    rows = syha_rows(p.coefficients_in(index), q.coefficients_in(index), 0, MPoly.zero())
    raw = determinant(rows)
    logger.debug(f"Resultant in x{index + 1} of total degree {raw.total_degree}")
    return Resultant(raw, raw.canonical())
