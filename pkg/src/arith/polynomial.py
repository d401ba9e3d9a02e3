"""
Exact Polynomials
Dense univariate and sparse trivariate polynomials over the rationals

Both types are immutable wrappers around sympy ``Poly`` objects over QQ. The wrappers fix the
variable set (x1, x2, x3 for MPoly), expose coefficients as ``fractions.Fraction`` for the hot
numeric paths, and carry the canonical normalization used everywhere downstream.
"""

from fractions import Fraction
from functools import reduce
from math import gcd as igcd, lcm as ilcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy
from sympy import QQ, Poly

from src.core.errors import ZeroPolynomialError

X1, X2, X3 = sympy.symbols("x1 x2 x3")
GENS = (X1, X2, X3)
VARIABLES = ("x1", "x2", "x3")

Number = Union[int, Fraction]
Exponent = Tuple[int, int, int]
Variable = Union[int, str, sympy.Symbol]


def variable_index(var: Variable) -> int:
    """Map 0..2, 'x1'..'x3' or a generator symbol to the variable index"""
    if isinstance(var, int) and 0 <= var < 3:
        return var
    name = str(var)
    if name in VARIABLES:
        return VARIABLES.index(name)
    raise ValueError(f"unknown variable {var!r}")


def to_fraction(value) -> Fraction:
    """Convert ints, Fractions and sympy/gmpy rationals to Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    return Fraction(int(value.numerator), int(value.denominator))


def to_rational(value: Number) -> sympy.Rational:
    value = to_fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


class UPoly:
    """
    Dense univariate polynomial with rational coefficients

    ``coefficients[k]`` is the coefficient of X^k; the list carries no trailing zeros, so the
    zero polynomial has an empty list and degree -1.
    """

    __slots__ = ("_poly", "_coeffs", "var")

    def __init__(self, coefficients: Iterable[Number] = (), var: str = "x"):
        coeffs = [to_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(coeffs)
        self.var = var
        self._poly: Optional[Poly] = None

    @classmethod
    def from_sympy(cls, poly: Poly, var: Optional[str] = None) -> "UPoly":
        coeffs = [to_fraction(c) for c in reversed(poly.all_coeffs())] if not poly.is_zero else []
        return cls(coeffs, var or str(poly.gen))

    @classmethod
    def constant(cls, value: Number, var: str = "x") -> "UPoly":
        return cls([value], var)

    @classmethod
    def linear_root(cls, root: Number, var: str = "x") -> "UPoly":
        """The monic polynomial X - root"""
        return cls([-to_fraction(root), 1], var)

    @property
    def sympy(self) -> Poly:
        if self._poly is None:
            high_to_low = [to_rational(c) for c in reversed(self._coeffs)] or [0]
            self._poly = Poly(high_to_low, sympy.Symbol(self.var), domain=QQ)
        return self._poly

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def evaluate(self, value: Number) -> Fraction:
        """Exact Horner evaluation at a rational point"""
        acc = Fraction(0)
        value = to_fraction(value)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def sign_at_rational(self, value: Number) -> int:
        v = self.evaluate(value)
        return (v > 0) - (v < 0)

    def derivative(self) -> "UPoly":
        return UPoly([k * c for k, c in enumerate(self._coeffs)][1:], self.var)

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        lc = self.leading_coefficient
        return UPoly([c / lc for c in self._coeffs], self.var)

    def integer_coefficients(self) -> List[int]:
        """Primitive integer coefficients (low to high) with the same roots"""
        if self.is_zero:
            return []
        denominators = reduce(ilcm, (c.denominator for c in self._coeffs), 1)
        ints = [int(c * denominators) for c in self._coeffs]
        content = reduce(igcd, (abs(v) for v in ints), 0) or 1
        return [v // content for v in ints]

    def square_free(self) -> "UPoly":
        if self.degree < 1:
            return self
        return UPoly.from_sympy(self.sympy.sqf_part(), self.var)

    def compose_affine(self, scale: Number, shift: Number) -> "UPoly":
        """P(scale*X + shift)"""
        scale, shift = to_fraction(scale), to_fraction(shift)
        result = UPoly([], self.var)
        linear = UPoly([shift, scale], self.var)
        for c in reversed(self._coeffs):
            result = result * linear + UPoly([c], self.var)
        return result

    def _aligned(self, other: "UPoly") -> Poly:
        if other.var == self.var:
            return other.sympy
        return UPoly(other.coefficients, self.var).sympy

    def __add__(self, other: "UPoly") -> "UPoly":
        n = max(len(self._coeffs), len(other._coeffs))
        return UPoly([self.coefficient(k) + other.coefficient(k) for k in range(n)], self.var)

    def __sub__(self, other: "UPoly") -> "UPoly":
        n = max(len(self._coeffs), len(other._coeffs))
        return UPoly([self.coefficient(k) - other.coefficient(k) for k in range(n)], self.var)

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self._coeffs], self.var)

    def __mul__(self, other: Union["UPoly", Number]) -> "UPoly":
        if not isinstance(other, UPoly):
            factor = to_fraction(other)
            return UPoly([c * factor for c in self._coeffs], self.var)
        return UPoly.from_sympy(self.sympy * self._aligned(other), self.var)

    __rmul__ = __mul__

    def __divmod__(self, other: "UPoly") -> Tuple["UPoly", "UPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = self.sympy.div(self._aligned(other))
        return UPoly.from_sympy(q, self.var), UPoly.from_sympy(r, self.var)

    def exquo(self, other: "UPoly") -> "UPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"UPoly({self.to_text()})"

    def to_text(self) -> str:
        terms = {(k,): c for k, c in enumerate(self._coeffs) if c}
        return _format_terms(terms, (self.var,))

    def __getstate__(self):
        return {"coeffs": self._coeffs, "var": self.var}

    def __setstate__(self, state):
        self._coeffs = state["coeffs"]
        self.var = state["var"]
        self._poly = None


def upoly_gcd(p: UPoly, q: UPoly) -> UPoly:
    """
    Monic greatest common divisor

    Args:
        p: first polynomial
        q: second polynomial

    Returns:
        monic gcd; gcd(P, 0) = monic(P)

    Raises:
        ZeroPolynomialError: when both inputs are zero
    """
    if p.is_zero and q.is_zero:
        raise ZeroPolynomialError("gcd of two zero polynomials is undefined")
    if q.is_zero:
        return p.monic()
    if p.is_zero:
        return UPoly(q.monic().coefficients, p.var)
    g = p.sympy.gcd(p._aligned(q))
    return UPoly.from_sympy(g, p.var).monic()


def _canonical_key(exponent: Sequence[int]) -> Tuple[int, ...]:
    # lex order with X1 < X2 < X3: compare the X3 exponent first
    return tuple(reversed(tuple(exponent)))


class MPoly:
    """
    Sparse polynomial in x1, x2, x3 with rational coefficients

    Exponent vectors always have arity three; variables that do not occur carry exponent 0.
    """

    __slots__ = ("_poly", "_terms")

    def __init__(self, poly: Poly):
        if poly.gens != GENS:
            poly = Poly(poly.as_expr(), *GENS, domain=QQ)
        elif poly.get_domain() != QQ:
            poly = poly.set_domain(QQ)
        self._poly = poly
        self._terms: Optional[Dict[Exponent, Fraction]] = None

    @classmethod
    def from_terms(cls, terms: Mapping[Sequence[int], Number]) -> "MPoly":
        data = {}
        for exponent, coefficient in terms.items():
            exponent = tuple(exponent) + (0,) * (3 - len(exponent))
            if coefficient:
                data[exponent] = to_rational(coefficient)
        if not data:
            return cls.zero()
        return cls(Poly.from_dict(data, *GENS, domain=QQ))

    @classmethod
    def from_expr(cls, expr) -> "MPoly":
        return cls(Poly(expr, *GENS, domain=QQ))

    @classmethod
    def zero(cls) -> "MPoly":
        return cls(Poly(0, *GENS, domain=QQ))

    @classmethod
    def constant(cls, value: Number) -> "MPoly":
        return cls(Poly(to_rational(value), *GENS, domain=QQ))

    @classmethod
    def variable(cls, var: Variable) -> "MPoly":
        return cls(Poly(GENS[variable_index(var)], *GENS, domain=QQ))

    @classmethod
    def from_upoly(cls, p: UPoly, var: Variable) -> "MPoly":
        index = variable_index(var)
        terms = {}
        for k, c in enumerate(p.coefficients):
            exponent = [0, 0, 0]
            exponent[index] = k
            terms[tuple(exponent)] = c
        return cls.from_terms(terms)

    @property
    def sympy(self) -> Poly:
        return self._poly

    def terms(self) -> Dict[Exponent, Fraction]:
        if self._terms is None:
            self._terms = {tuple(m): to_fraction(c) for m, c in self._poly.as_dict().items()
                           if c != 0}
        return self._terms

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    @property
    def is_constant(self) -> bool:
        return self._poly.is_ground

    def constant_value(self) -> Fraction:
        return self.terms().get((0, 0, 0), Fraction(0))

    def degree(self, var: Variable) -> int:
        """Degree in one variable; -1 for the zero polynomial"""
        if self.is_zero:
            return -1
        index = variable_index(var)
        return max(e[index] for e in self.terms())

    @property
    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(e) for e in self.terms())

    def variables(self) -> Tuple[int, ...]:
        used = set()
        for exponent in self.terms():
            used.update(i for i, e in enumerate(exponent) if e)
        return tuple(sorted(used))

    def coefficients_in(self, var: Variable) -> List["MPoly"]:
        """View as univariate in var: coefficient list low to high with MPoly entries"""
        index = variable_index(var)
        buckets: Dict[int, Dict[Exponent, Fraction]] = {}
        for exponent, c in self.terms().items():
            reduced = list(exponent)
            k = reduced[index]
            reduced[index] = 0
            buckets.setdefault(k, {})[tuple(reduced)] = c
        degree = self.degree(var)
        return [MPoly.from_terms(buckets.get(k, {})) for k in range(degree + 1)]

    def leading_coefficient_in(self, var: Variable) -> "MPoly":
        coeffs = self.coefficients_in(var)
        return coeffs[-1] if coeffs else MPoly.zero()

    def is_regular_in(self, var: Variable) -> bool:
        """True when the coefficient of the top power of var is a nonzero constant"""
        if self.is_zero or self.degree(var) < 1:
            return False
        return self.leading_coefficient_in(var).is_constant

    def derivative(self, var: Variable) -> "MPoly":
        return MPoly(self._poly.diff(GENS[variable_index(var)]))

    def evaluate(self, assignment: Mapping[Variable, Number]) -> "MPoly":
        """Partial substitution of rational values; the arity stays three"""
        values = {variable_index(k): to_fraction(v) for k, v in assignment.items()}
        result: Dict[Exponent, Fraction] = {}
        for exponent, c in self.terms().items():
            reduced = list(exponent)
            for index, value in values.items():
                c = c * value ** reduced[index]
                reduced[index] = 0
            key = tuple(reduced)
            result[key] = result.get(key, Fraction(0)) + c
        return MPoly.from_terms(result)

    def to_upoly(self, var: Variable) -> UPoly:
        """Convert a polynomial that only involves var"""
        index = variable_index(var)
        if any(i != index for i in self.variables()):
            raise ValueError(f"{self.to_text()} involves more than {VARIABLES[index]}")
        coeffs: Dict[int, Fraction] = {e[index]: c for e, c in self.terms().items()}
        degree = max(coeffs) if coeffs else -1
        return UPoly([coeffs.get(k, Fraction(0)) for k in range(degree + 1)], VARIABLES[index])

    def substitute_linear(self, var: Variable, image: "MPoly") -> "MPoly":
        """Replace var by another polynomial"""
        index = variable_index(var)
        expr = self._poly.as_expr().subs(GENS[index], image.sympy.as_expr())
        return MPoly(Poly(expr, *GENS, domain=QQ))

    def linear_change(self, matrix: Sequence[Sequence[Number]]) -> "MPoly":
        """Simultaneous substitution x_i -> sum_j matrix[i][j] x_j"""
        images = {
            GENS[i]: sum(to_rational(matrix[i][j]) * GENS[j] for j in range(3)) for i in range(3)
        }
        expr = self._poly.as_expr().xreplace(images)
        return MPoly(Poly(expr, *GENS, domain=QQ))

    def canonical(self) -> "MPoly":
        """
        Canonical representative up to a rational constant

        Primitive integer coefficients and a positive leading coefficient under the lex order
        with X1 < X2 < X3.
        """
        if self.is_zero:
            return self
        terms = self.terms()
        denominators = reduce(ilcm, (c.denominator for c in terms.values()), 1)
        numerators = reduce(igcd, (abs(int(c * denominators)) for c in terms.values()), 0)
        scale = Fraction(denominators, numerators)
        leading = max(terms, key=_canonical_key)
        if terms[leading] < 0:
            scale = -scale
        if scale == 1:
            return self
        return self * scale

    def divides(self, other: "MPoly") -> bool:
        """True when self divides other exactly"""
        if self.is_zero:
            return other.is_zero
        _, remainder = other.sympy.div(self._poly)
        return remainder.is_zero

    def exquo(self, other: "MPoly") -> "MPoly":
        return MPoly(self._poly.exquo(other.sympy))

    def __add__(self, other: Union["MPoly", Number]) -> "MPoly":
        other = other if isinstance(other, MPoly) else MPoly.constant(other)
        return MPoly(self._poly + other._poly)

    __radd__ = __add__

    def __sub__(self, other: Union["MPoly", Number]) -> "MPoly":
        other = other if isinstance(other, MPoly) else MPoly.constant(other)
        return MPoly(self._poly - other._poly)

    def __rsub__(self, other: Number) -> "MPoly":
        return MPoly.constant(other) - self

    def __neg__(self) -> "MPoly":
        return MPoly(-self._poly)

    def __mul__(self, other: Union["MPoly", Number]) -> "MPoly":
        if isinstance(other, MPoly):
            return MPoly(self._poly * other._poly)
        return MPoly(self._poly * to_rational(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MPoly":
        return MPoly(self._poly ** exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self._poly == other._poly
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._poly)

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        return _format_terms(self.terms(), VARIABLES)

    def __getstate__(self):
        return {"terms": self.terms()}

    def __setstate__(self, state):
        rebuilt = MPoly.from_terms(state["terms"])
        self._poly = rebuilt._poly
        self._terms = None


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_terms(terms: Mapping[Tuple[int, ...], Fraction], names: Sequence[str]) -> str:
    if not terms:
        return "0"
    ordered = sorted(terms.items(), key=lambda item: (-sum(item[0]), [-e for e in item[0]]))
    pieces = []
    for exponent, c in ordered:
        factors = []
        for name, e in zip(names, exponent):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        magnitude = abs(c)
        if not factors:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coefficient(magnitude)] + factors)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def polynomial_gcd(p: MPoly, q: MPoly) -> MPoly:
    """Multivariate gcd, canonical; gcd(P, 0) = canonical(P)"""
    if p.is_zero and q.is_zero:
        raise ZeroPolynomialError("gcd of two zero polynomials is undefined")
    if q.is_zero:
        return p.canonical()
    if p.is_zero:
        return q.canonical()
    return MPoly(p.sympy.gcd(q.sympy)).canonical()


def derivative(p: MPoly, var: Variable) -> MPoly:
    """Formal partial derivative"""
    return p.derivative(var)


def evaluate(p: MPoly, assignment: Mapping[Variable, Number]) -> MPoly:
    """Partial substitution; the result is a polynomial in the remaining variables"""
    return p.evaluate(assignment)


def content_in(p: MPoly, var: Variable) -> MPoly:
    """Gcd of the coefficients of p viewed as univariate in var"""
    coefficients = [c for c in p.coefficients_in(var) if not c.is_zero]
    return reduce(polynomial_gcd, coefficients).canonical()


def square_free_part(p: MPoly, var: Variable = "x3") -> MPoly:
    """
    Square-free part, canonical

    The primitive part in var is reduced by its gcd with its var-derivative; the content is
    reduced the same way in the remaining variables.

    Raises:
        ZeroPolynomialError: when p is zero
    """
    if p.is_zero:
        raise ZeroPolynomialError("square-free part of the zero polynomial")
    if p.is_constant:
        return MPoly.constant(1)
    index = variable_index(var)
    if p.degree(index) < 1:
        return MPoly(p.sympy.sqf_part()).canonical()
    content = content_in(p, index)
    primitive = p.exquo(content)
    reduced = primitive.exquo(polynomial_gcd(primitive, primitive.derivative(index)))
    if content.is_constant:
        return reduced.canonical()
    return (reduced * MPoly(content.sympy.sqf_part())).canonical()


def gcd_free_part(p: MPoly, q: MPoly, var: Variable = "x3") -> MPoly:
    """
    P / gcd(P, Q), canonical

    Raises:
        ZeroPolynomialError: when p is zero
    """
    variable_index(var)
    if p.is_zero:
        raise ZeroPolynomialError("gcd-free part of the zero polynomial")
    if q.is_zero:
        return MPoly.constant(1)
    return p.exquo(polynomial_gcd(p, q)).canonical()


def gcd_free_basis(polys: Iterable[MPoly]) -> List[MPoly]:
    """
    Pairwise coprime square-free canonical polynomials with the same zero sets

    Every input is, up to a constant, a product of powers of basis elements. Constants are
    dropped. The order follows first appearance.
    """
    basis: List[MPoly] = []
    for poly in polys:
        if poly.is_zero or poly.is_constant:
            continue
        remaining = MPoly(poly.sympy.sqf_part()).canonical()
        updated: List[MPoly] = []
        for element in basis:
            if remaining.is_constant:
                updated.append(element)
                continue
            common = polynomial_gcd(element, remaining)
            if common.is_constant:
                updated.append(element)
                continue
            rest = element.exquo(common).canonical()
            if not rest.is_constant:
                updated.append(rest)
            updated.append(common)
            remaining = remaining.exquo(common).canonical()
        if not remaining.is_constant:
            updated.append(remaining)
        basis = updated
    return basis
