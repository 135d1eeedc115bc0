"""Recursive-descent parser for rational expressions in Laurent variables.

Grammar (whitespace is insignificant)::

    expr   := ["-" | "+"] term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := base ("^" signed-int)?
    base   := integer | identifier | "(" expr ")"

Identifiers match ``[A-Za-z][A-Za-z0-9']*``. An exponent may also be written
in parentheses, ``x^(-2)``.
"""

from __future__ import annotations

import re
from typing import Sequence

from pwmirror.poly.laurent import LaurentPoly
from pwmirror.poly.rational import RationalExpr

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9']*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownVariableError(ParseError):
    pass


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: Sequence[str]):
        self.text = text
        self.vars = tuple(vars)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind != "op":
            found = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {value!r}, found {found}", pos, self.text)

    def const(self, c: int) -> RationalExpr:
        return RationalExpr(LaurentPoly.constant(c, self.vars))

    def parse(self) -> RationalExpr:
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos, self.text)
        return value

    def expr(self) -> RationalExpr:
        negate = False
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self) -> RationalExpr:
        value = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.factor()
                if val == "*":
                    value = value * rhs
                else:
                    if not rhs.numerator:
                        raise ZeroDivisionError(f"division by the zero polynomial at position {pos}")
                    value = value / rhs
            else:
                return value

    def factor(self) -> RationalExpr:
        value = self.base()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            n = self.exponent()
            if n < 0 and not value.numerator:
                raise ZeroDivisionError(f"negative power of zero at position {pos}")
            value = value ** n
        return value

    def exponent(self) -> int:
        kind, val, pos = self.peek()
        if kind == "op" and val == "(":
            self.take()
            n = self.exponent()
            self.expect(")")
            return n
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
            kind, val, pos = self.peek()
        if kind != "int":
            raise ParseError("expected an integer exponent", pos, self.text)
        self.take()
        return sign * int(val)

    def base(self) -> RationalExpr:
        kind, val, pos = self.take()
        if kind == "int":
            return self.const(int(val))
        if kind == "name":
            if val not in self.vars:
                raise UnknownVariableError(f"unknown variable {val!r}", pos, self.text)
            return RationalExpr(LaurentPoly.variable(val, self.vars))
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect(")")
            return value
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {found}", pos, self.text)


def parse_expr(text: str, vars: Sequence[str]) -> RationalExpr:
    """Parse ``text`` into an exact rational expression over ``vars``.

    >>> str(parse_expr("v + 1/(x*y*z*u*v)", "xyzuv"))
    'x^-1*y^-1*z^-1*u^-1*v^-1 + v'
    """
    if len(set(vars)) != len(tuple(vars)):
        raise ValueError("duplicate variable names")
    return _Parser(text, vars).parse()


def parse_poly(text: str, vars: Sequence[str]) -> LaurentPoly:
    """Parse ``text`` and require the result to be a Laurent polynomial."""
    value = parse_expr(text, vars)
    if not value.is_polynomial():
        raise ValueError(f"{text!r} is not a Laurent polynomial")
    return value.numerator
