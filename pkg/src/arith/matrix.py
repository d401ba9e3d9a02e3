"""
Rational Matrices
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from src.arith.elimination import bareiss_rank


@dataclass(frozen=True)
class QMatrix:
    """Dense matrix of rationals"""
    n_rows: int
    n_cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n_rows:
            raise ValueError(f"expected {self.n_rows} rows, got {len(self.entries)}")
        for row in self.entries:
            if len(row) != self.n_cols:
                raise ValueError(f"row of length {len(row)} in a {self.n_cols}-column matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], n_cols: int = None) -> "QMatrix":
        entries = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if n_cols is None:
            n_cols = len(entries[0]) if entries else 0
        return cls(len(entries), n_cols, entries)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "QMatrix":
        return cls(n_rows, n_cols, tuple((Fraction(0),) * n_cols for _ in range(n_rows)))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def rows(self) -> List[List[Fraction]]:
        return [list(row) for row in self.entries]

    def rank(self) -> int:
        return bareiss_rank(self.entries) if self.n_rows and self.n_cols else 0

    def to_numpy(self) -> np.ndarray:
        """Float copy, for inspection and numeric cross-checks only"""
        return np.array([[float(v) for v in row] for row in self.entries],
                        dtype=float).reshape(self.n_rows, self.n_cols)

    def to_grid(self, name: str) -> str:
        """Whitespace-separated grid with a 'name rows cols' header"""
        lines = [f"{name} {self.n_rows} {self.n_cols}"]
        for row in self.entries:
            lines.append(" ".join(_format_entry(v) for v in row))
        return "\n".join(lines)


def _format_entry(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else str(value)
