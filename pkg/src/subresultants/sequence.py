"""
Signed Subresultant Sequences
The subresultant ladder of a pair and what it reveals after specialization: gcd degrees, the
coordinate of a shared root, and Sturm-Habicht real root counts
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from src.arith.polynomial import MPoly, Variable, variable_index
from src.core.errors import CommonFactorError, DegreeError, NotGenericError
from src.roots.algebraic import AlgebraicNumber, Rational, as_algebraic, sign_at
from src.roots.values import CriticalOrdinate
from src.subresultants.sylvester import determinant, syha_rows

logger = logging.getLogger(__name__)

SignFunction = Callable[[MPoly], int]


@dataclass
class SignedSubresultantSequence:
    """
    Signed subresultants of (P, Q) with respect to one variable

    ``p`` and ``q`` are the polynomials the ladder is built on: when the input degrees are equal
    Q has already been replaced by lc(P) Q - lc(Q) P. Coefficients sRes_{j,k} are determinants of
    SyHa_j minors and are computed on first use.
    """
    p: MPoly
    q: MPoly
    var: int
    replaced: bool = False
    _p_coeffs: List[MPoly] = field(default_factory=list, repr=False)
    _q_coeffs: List[MPoly] = field(default_factory=list, repr=False)
    _cache: Dict[Tuple[int, int], MPoly] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._p_coeffs = self.p.coefficients_in(self.var)
        self._q_coeffs = self.q.coefficients_in(self.var)

    @property
    def deg_p(self) -> int:
        return len(self._p_coeffs) - 1

    @property
    def deg_q(self) -> int:
        return len(self._q_coeffs) - 1

    def coefficient(self, j: int, k: int) -> MPoly:
        """sRes_{j,k}: the coefficient of X^k in sResP_j"""
        if not 0 <= j <= self.deg_q:
            raise DegreeError(f"subresultant index {j} outside 0..{self.deg_q}")
        if not 0 <= k <= j:
            raise DegreeError(f"coefficient index {k} outside 0..{j}")
        key = (j, k)
        if key not in self._cache:
            rows = syha_rows(self._p_coeffs, self._q_coeffs, j, MPoly.zero())
            width = self.deg_p + self.deg_q - j
            size = self.deg_p + self.deg_q - 2 * j
            columns = list(range(size - 1)) + [width - 1 - k]
            minor = [[row[c] for c in columns] for row in rows]
            self._cache[key] = determinant(minor)
        return self._cache[key]

    def principal(self, j: int) -> MPoly:
        """sRes_j; zero above the ladder"""
        if j > self.deg_q:
            return MPoly.zero()
        return self.coefficient(j, j)

    def polynomial(self, j: int) -> List[MPoly]:
        """sResP_j as its coefficient list, low to high"""
        return [self.coefficient(j, k) for k in range(j + 1)]

    @property
    def resultant(self) -> MPoly:
        return self.principal(0)

    def ladder(self) -> List[MPoly]:
        return [self.principal(j) for j in range(self.deg_q + 1)]


def signed_subresultants(p: MPoly, q: MPoly, var: Variable) -> SignedSubresultantSequence:
    """
    The signed subresultant sequence of a pair

    The pair is ordered so the first entry has the larger degree. Equal degrees are handled by
    replacing Q with a_p Q - b_q P, which keeps the common roots wherever a_p does not vanish.

    Raises:
        DegreeError: either input is constant in var
        CommonFactorError: the two polynomials are proportional
    """
    index = variable_index(var)
    deg_p, deg_q = p.degree(index), q.degree(index)
    if deg_p < 1 or deg_q < 1:
        raise DegreeError(f"constant-degree input to a subresultant sequence in x{index + 1}")
    if deg_q > deg_p:
        p, q = q, p
        deg_p, deg_q = deg_q, deg_p
    replaced = False
    if deg_p == deg_q:
        q = p.leading_coefficient_in(index) * q - q.leading_coefficient_in(index) * p
        replaced = True
        if q.is_zero:
            raise CommonFactorError("proportional polynomials have no subresultant sequence",
                                    p.canonical())
    return SignedSubresultantSequence(p, q, index, replaced)


def _sign_function(x: Union[AlgebraicNumber, Rational, SignFunction]) -> SignFunction:
    if callable(x) and not isinstance(x, AlgebraicNumber):
        return x
    alpha = as_algebraic(x, "x1")
    return lambda poly: sign_at(poly, alpha)


def gcd_degree_at(seq: SignedSubresultantSequence, x) -> int:
    """
    Degree of the gcd of P and Q specialized at x

    Args:
        seq: ladder of a pair that stays regular under the specialization
        x: AlgebraicNumber or rational for ladders of bivariate pairs, or a callable giving the
            exact sign of a coefficient at the specialization point

    Returns:
        the least j with sRes_j(x) != 0

    Raises:
        NotGenericError: every ladder entry vanishes at x
    """
    sign = _sign_function(x)
    for j in range(seq.deg_q + 1):
        if sign(seq.principal(j)) != 0:
            return j
    raise NotGenericError("regularity", "the whole subresultant ladder vanishes")


def has_single_root(seq: SignedSubresultantSequence, j: int, x) -> bool:
    """
    True when sResP_j specialized at x is c (X - y)^j

    Checks g_k (j g_j)^{j-k} = g_j C(j, k) g_{j-1}^{j-k} for every k < j - 1 exactly.
    """
    if j <= 1:
        return True
    sign = _sign_function(x)
    g = seq.polynomial(j)
    lead = g[j] * j
    for k in range(j - 1):
        lhs = g[k] * lead ** (j - k)
        rhs = g[j] * comb(j, k) * g[j - 1] ** (j - k)
        if sign(lhs - rhs) != 0:
            return False
    return True


def shared_root_y(
    seq: SignedSubresultantSequence, j: int, x, point: Optional[Sequence] = None
) -> CriticalOrdinate:
    """
    The common root above x, as -sRes_{j,j-1}(x) / (j sRes_j(x))

    Args:
        seq: the ladder
        j: the gcd degree at x
        x: AlgebraicNumber or rational (bivariate ladders)
        point: coordinates to evaluate at instead of (x,) for ladders in x3

    Raises:
        DegreeError: j = 0 (no common root)
    """
    if j < 1:
        raise DegreeError("a gcd of degree 0 has no root")
    if point is None:
        point = (as_algebraic(x, "x1"),)
    num = -seq.coefficient(j, j - 1)
    den = seq.principal(j) * j
    return CriticalOrdinate(num, den, point)


def permanences_minus_variations(signs: Sequence[int]) -> int:
    """
    PmV of a sign sequence s_p, ..., s_0 (s_p != 0)

    Trailing zeros are dropped; for consecutive nonzero entries s_i, s_j (i > j) separated by
    zeros, an odd gap i - j contributes (-1)^{(i-j)(i-j-1)/2} sign(s_i s_j), an even gap nothing.
    """
    items = list(signs)
    while items and items[-1] == 0:
        items.pop()
    total = 0
    last_index: Optional[int] = None
    for position, s in enumerate(items):
        if s == 0:
            continue
        if last_index is not None:
            gap = position - last_index
            if gap % 2 == 1:
                epsilon = -1 if (gap * (gap - 1) // 2) % 2 else 1
                total += epsilon * items[last_index] * s
        last_index = position
    return total


def sturm_habicht_signs(seq: SignedSubresultantSequence, x) -> List[int]:
    """Signs of sRes_p, ..., sRes_0 at x for a ladder of (P, dP/dX)"""
    sign = _sign_function(x)
    lead = seq._p_coeffs[-1]
    signs = [sign(lead)]
    signs += [sign(seq.principal(j)) for j in range(seq.deg_q, -1, -1)]
    return signs


def count_distinct_real_roots(seq: SignedSubresultantSequence, x) -> int:
    """Number of distinct real roots of P specialized at x, from the (P, P') ladder"""
    return permanences_minus_variations(sturm_habicht_signs(seq, x))
