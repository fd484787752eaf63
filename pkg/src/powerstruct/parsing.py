"""Text grammar for ring elements and series.

One grammar covers every value the command line accepts:

* rationals: ``3``, ``1/2``, ``-7/3``
* polynomial variables: any identifier (``L``, ``u``, ``v``, ``q``, ...);
  all variables appearing in one expression share one alphabet
* power sums and friends: ``p[2]``, ``p[1,1]``, ``h[3]``, ``e[2]``, ``s[3,1]``
* the series variable ``t`` (meaningful only when an order is supplied)
* operators ``+ - * / ^`` and parentheses; ``^`` takes an integer exponent

so ``1/2*p[1,1] + 1/2*p[2]``, ``L^5 - L^2``, ``1/(1 - L*t)`` and
``(1 + t)^3`` all parse.  The name ``t`` is reserved, and ``p``/``h``/``e``/
``s`` are special only when directly followed by ``[``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .rings import SCALAR_TYPES, LaurentPoly, Rational
from .series import TruncSeries
from .symfunc import SymFunc, basis_in_p

_TOKEN_RE = re.compile(
    r"(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()\[\],])"
)

_BASIS_NAMES = ("p", "h", "e", "s")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(), pos))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(
        self,
        tokens: list[_Token],
        order: int | None,
        bound: int | None,
        vars: tuple[str, ...],
    ):
        self.tokens = tokens
        self.index = 0
        self.order = order
        self.bound = bound
        self.vars = vars

    def peek(self) -> _Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def next(self) -> _Token:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of expression")
        self.index += 1
        return token

    def expect_op(self, op: str) -> None:
        token = self.next()
        if token.kind != "op" or token.text != op:
            raise ParseError(f"expected {op!r} at position {token.position}")

    def at_op(self, *ops: str) -> bool:
        token = self.peek()
        return token is not None and token.kind == "op" and token.text in ops

    # precedence: sum < product < unary < power < primary

    def parse_sum(self):
        value = self.parse_product()
        while self.at_op("+", "-"):
            op = self.next().text
            rhs = self.parse_product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_product(self):
        value = self.parse_unary()
        while self.at_op("*", "/"):
            op = self.next().text
            rhs = self.parse_unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def parse_unary(self):
        if self.at_op("-"):
            self.next()
            return -self.parse_unary()
        if self.at_op("+"):
            self.next()
            return self.parse_unary()
        return self.parse_power()

    def parse_power(self):
        base = self.parse_primary()
        if self.at_op("^"):
            self.next()
            return base ** self.parse_int_exponent()
        return base

    def parse_int_exponent(self) -> int:
        if self.at_op("("):
            self.next()
            value = self.parse_int_exponent()
            self.expect_op(")")
            return value
        sign = 1
        if self.at_op("-"):
            self.next()
            sign = -1
        token = self.next()
        if token.kind != "int":
            raise ParseError(f"expected an integer exponent at position {token.position}")
        return sign * int(token.text)

    def parse_int_list(self) -> list[int]:
        parts: list[int] = []
        self.expect_op("[")
        if self.at_op("]"):
            self.next()
            return parts
        while True:
            token = self.next()
            if token.kind != "int":
                raise ParseError(f"expected an integer at position {token.position}")
            parts.append(int(token.text))
            if self.at_op("]"):
                self.next()
                return parts
            self.expect_op(",")

    def parse_primary(self):
        token = self.next()
        if token.kind == "int":
            return Rational(int(token.text))
        if token.kind == "op" and token.text == "(":
            value = self.parse_sum()
            self.expect_op(")")
            return value
        if token.kind == "name":
            name = token.text
            if name in _BASIS_NAMES and self.at_op("["):
                return self._basis_atom(name, token.position)
            if name == "t":
                if self.order is None:
                    raise ParseError("the series variable t needs a truncation order")
                return TruncSeries.t_var(self.order)
            if name not in self.vars:
                raise ParseError(f"unknown variable {name!r}")
            return LaurentPoly.var(name, self.vars)
        raise ParseError(f"unexpected token {token.text!r} at position {token.position}")

    def _basis_atom(self, name: str, position: int):
        if self.bound is None:
            raise ParseError(
                f"symmetric-function atom {name}[...] needs a generator bound"
            )
        parts = self.parse_int_list()
        if name in ("h", "e"):
            if len(parts) != 1:
                raise ParseError(
                    f"{name}[...] takes exactly one index (position {position})"
                )
            return basis_in_p(name, parts[0], self.bound)
        return basis_in_p(name, tuple(parts), self.bound)


def scan_variables(text: str) -> tuple[str, ...]:
    """Variable names used by an expression (excluding t and basis atoms)."""
    tokens = _tokenize(text)
    names = set()
    for i, token in enumerate(tokens):
        if token.kind != "name" or token.text == "t":
            continue
        follows_bracket = (
            i + 1 < len(tokens)
            and tokens[i + 1].kind == "op"
            and tokens[i + 1].text == "["
        )
        if token.text in _BASIS_NAMES and follows_bracket:
            continue
        names.add(token.text)
    return tuple(sorted(names))


def parse_expression(
    text: str,
    order: int | None = None,
    bound: int | None = None,
    vars: tuple[str, ...] | None = None,
):
    """Parse and evaluate; the result is a Fraction, LaurentPoly, SymFunc or
    TruncSeries depending on which atoms appear."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    if vars is None:
        vars = scan_variables(text)
    if bound is None:
        bound = order
    parser = _Parser(tokens, order, bound, tuple(vars))
    value = parser.parse_sum()
    if parser.peek() is not None:
        token = parser.peek()
        raise ParseError(f"trailing input {token.text!r} at position {token.position}")
    return value


def parse_poly(text: str, vars: tuple[str, ...] | None = None) -> LaurentPoly:
    """Parse a Laurent polynomial (a bare rational becomes a constant)."""
    value = parse_expression(text, vars=vars)
    if isinstance(value, SCALAR_TYPES):
        return LaurentPoly.constant(value, vars or ())
    if isinstance(value, LaurentPoly):
        return value
    raise ParseError(f"expected a polynomial, got {type(value).__name__}")


def parse_symfunc(
    text: str, bound: int, vars: tuple[str, ...] | None = None
) -> SymFunc:
    """Parse a symmetric function with the given generator bound."""
    value = parse_expression(text, bound=bound, vars=vars)
    if isinstance(value, SCALAR_TYPES) or isinstance(value, LaurentPoly):
        return SymFunc.constant(value, bound, getattr(value, "vars", ()))
    if isinstance(value, SymFunc):
        return value
    raise ParseError(f"expected a symmetric function, got {type(value).__name__}")


def parse_series(
    text: str,
    order: int,
    bound: int | None = None,
    vars: tuple[str, ...] | None = None,
) -> TruncSeries:
    """Parse a truncated series; non-series values become constant series."""
    value = parse_expression(text, order=order, bound=bound, vars=vars)
    if isinstance(value, TruncSeries):
        return value
    return TruncSeries.constant(value, order)
