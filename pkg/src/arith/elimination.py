"""
Fraction-Free Elimination
Bareiss determinants over polynomial rings and exact ranks over the rationals
"""

from fractions import Fraction
from functools import reduce
from math import lcm as ilcm
from typing import Callable, List, Sequence, TypeVar

T = TypeVar("T")


def bareiss_determinant(
    rows: Sequence[Sequence[T]],
    exquo: Callable[[T, T], T],
    zero: T,
    one: T,
) -> T:
    """
    Determinant of a square matrix over an integral domain

    Every intermediate entry is a minor of the input, so each division is exact.

    Args:
        rows: square matrix
        exquo: exact division in the ring
        zero: additive identity
        one: multiplicative identity

    Returns:
        det(rows)
    """
    n = len(rows)
    if n == 0:
        return one
    m = [list(row) for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 1:
        return m[0][0]

    sign = 1
    previous = one
    for k in range(n - 1):
        if m[k][k] == zero:
            for i in range(k + 1, n):
                if m[i][k] != zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                entry = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = entry if k == 0 else exquo(entry, previous)
            m[i][k] = zero
        previous = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def _integer_rows(rows: Sequence[Sequence]) -> List[List[int]]:
    result = []
    for row in rows:
        values = [Fraction(v) for v in row]
        scale = reduce(ilcm, (v.denominator for v in values), 1)
        result.append([int(v * scale) for v in values])
    return result


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """
    Exact rank of a rational matrix by fraction-free row echelon reduction

    Args:
        rows: matrix entries (ints or Fractions), rows of equal length

    Returns:
        rank
    """
    if not rows:
        return 0
    m = _integer_rows(rows)
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    previous = 1
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, n_rows):
            for j in range(col + 1, n_cols):
                m[i][j] = (pivot * m[i][j] - m[i][col] * m[rank][j]) // previous
            m[i][col] = 0
        previous = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank
