"""
Polynomial Text Format
Parser and printer for polynomials in x1, x2, x3 with rational coefficients

Grammar (whitespace is insignificant, '#' starts a comment running to the end of the line):

    poly   := term (('+' | '-') term)*
    term   := ['+' | '-'] factor ('*' factor)*
    factor := atom ['^' INTEGER]
    atom   := INTEGER ['/' INTEGER] | VARIABLE | '(' poly ')'

Implicit multiplication is rejected.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Union

from src.arith.polynomial import MPoly, VARIABLES
from src.core.errors import PolynomialSyntaxError, UnknownVariableError

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


@dataclass
class _Token:
    kind: str  # number | name | op | end
    text: str
    offset: int  # byte offset into the source text


def strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    position = 0
    while text[position:].strip():
        match = _TOKEN.match(text, position)
        if match is None:
            start = position + len(text[position:]) - len(text[position:].lstrip())
            raise PolynomialSyntaxError(
                f"unexpected character {text[start]!r}", _byte_offset(text, start)
            )
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), _byte_offset(text, match.start(kind))))
        position = match.end()
    tokens.append(_Token("end", "", _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, text: str) -> _Token:
        token = self.current
        if token.kind != "op" or token.text != text:
            found = token.text or "end of input"
            raise PolynomialSyntaxError(f"expected '{text}', found '{found}'", token.offset)
        return self.advance()

    def parse(self) -> MPoly:
        if self.current.kind == "end":
            raise PolynomialSyntaxError("empty polynomial", self.current.offset)
        poly = self.poly()
        if self.current.kind != "end":
            token = self.current
            raise PolynomialSyntaxError(
                f"unexpected '{token.text}' (implicit multiplication is not allowed)", token.offset
            )
        return poly

    def poly(self) -> MPoly:
        result = self.term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self.advance().text
            rhs = self.term(signed=False)
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self, signed: bool = True) -> MPoly:
        negate = False
        if signed and self.current.kind == "op" and self.current.text in "+-":
            negate = self.advance().text == "-"
        result = self.factor()
        while self.current.kind == "op" and self.current.text == "*":
            self.advance()
            result = result * self.factor()
        return -result if negate else result

    def factor(self) -> MPoly:
        base = self.atom()
        if self.current.kind == "op" and self.current.text == "^":
            self.advance()
            token = self.current
            if token.kind != "number":
                raise PolynomialSyntaxError("exponent must be a non-negative integer",
                                            token.offset)
            self.advance()
            return base ** int(token.text)
        return base

    def atom(self) -> MPoly:
        token = self.current
        if token.kind == "number":
            self.advance()
            value = Fraction(int(token.text))
            if self.current.kind == "op" and self.current.text == "/":
                self.advance()
                denominator = self.current
                if denominator.kind != "number":
                    raise PolynomialSyntaxError("expected an integer denominator",
                                                denominator.offset)
                if int(denominator.text) == 0:
                    raise PolynomialSyntaxError("zero denominator", denominator.offset)
                self.advance()
                value /= int(denominator.text)
            return MPoly.constant(value)
        if token.kind == "name":
            self.advance()
            if token.text not in VARIABLES:
                raise UnknownVariableError(token.text, token.offset)
            return MPoly.variable(token.text)
        if token.kind == "op" and token.text == "(":
            self.advance()
            inner = self.poly()
            self.expect(")")
            return inner
        found = token.text or "end of input"
        raise PolynomialSyntaxError(f"unexpected '{found}'", token.offset)


def poly_parse(text: str) -> MPoly:
    """
    Parse one polynomial

    Args:
        text: polynomial text; comments and whitespace are ignored

    Returns:
        The parsed MPoly

    Raises:
        PolynomialSyntaxError: malformed text, with the byte offset of the problem
        UnknownVariableError: a variable other than x1, x2, x3
    """
    return _Parser(strip_comment(text)).parse()


def poly_print(poly: MPoly) -> str:
    """Print in the grammar accepted by poly_parse"""
    return poly.to_text()


def read_polynomial_lines(source: Union[str, Path]) -> List[str]:
    """Non-empty lines of a polynomial file with comments removed"""
    text = Path(source).read_text(encoding="utf-8")
    return split_polynomial_lines(text)


def split_polynomial_lines(text: str) -> List[str]:
    lines = []
    for line in text.splitlines():
        body = strip_comment(line).strip()
        if body:
            lines.append(body)
    return lines


def parse_polynomial_file(source: Union[str, Path]) -> List[MPoly]:
    """Parse a file holding one polynomial per line"""
    return [poly_parse(line) for line in read_polynomial_lines(source)]
