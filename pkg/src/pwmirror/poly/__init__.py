"""Exact Laurent-polynomial toolkit: arithmetic, parsing, substitution, periods."""

from pwmirror.poly.kernels import BACKEND
from pwmirror.poly.laurent import (
    LaurentPoly,
    Monomial,
    VariableMismatchError,
    arith,
    constant_term,
    power,
    support,
)
from pwmirror.poly.parser import ParseError, UnknownVariableError, parse_expr, parse_poly
from pwmirror.poly.periods import period_sequence
from pwmirror.poly.rational import RationalExpr, substitute

# the name used throughout the docs
pow = power  # noqa: A001

__all__ = [
    "BACKEND",
    "LaurentPoly",
    "Monomial",
    "ParseError",
    "RationalExpr",
    "UnknownVariableError",
    "VariableMismatchError",
    "arith",
    "constant_term",
    "parse_expr",
    "parse_poly",
    "period_sequence",
    "pow",
    "power",
    "substitute",
    "support",
]
