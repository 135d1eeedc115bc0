"""Perverse mixed Hodge polynomials and the mirror exponent transform."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from pwmirror.mhs.tables import PerverseHodgeTable, TableError
from pwmirror.poly.laurent import format_terms
from pwmirror.poly.parser import parse_poly

PW_VARS = ("u", "t", "w", "p")

# (a, s, b, r): exponents of u, t, w, p
Exps = tuple[int, int, int, int]


class OutOfConeError(ValueError):
    pass


class PWPolynomial:
    """Integer polynomial in u, t, w, p keyed by exponent quadruples (a, s, b, r)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exps, int] | None = None):
        self._terms = {tuple(k): int(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def parse(cls, text: str) -> "PWPolynomial":
        """Read a polynomial written in u, t, w, p (e.g. ``"p^3 + 8*u^2*t^3*w"``)."""
        return cls(parse_poly(text, PW_VARS).terms)

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PWPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "PWPolynomial") -> "PWPolynomial":
        out = Counter(self._terms)
        out.update(other._terms)
        return PWPolynomial(out)

    def __neg__(self) -> "PWPolynomial":
        return PWPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "PWPolynomial") -> "PWPolynomial":
        return self + (-other)

    def evaluate(self, u=1, t=1, w=1, p=1):
        return sum(c * u**a * t**s * w**b * p**r for (a, s, b, r), c in self._terms.items())

    def sorted_items(self) -> list[tuple[Exps, int]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0][3], kv[0][1], kv[0][0], kv[0][2]))

    def __str__(self) -> str:
        return format_terms((c, PW_VARS, k) for k, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"PWPolynomial({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"u": a, "t": s, "w": b, "p": r, "coeff": c} for (a, s, b, r), c in self.sorted_items()
        ]


def pw_polynomial(t: PerverseHodgeTable) -> PWPolynomial:
    """Sum of ``mult * u^hodge t^degree w^(weight - degree) p^perverse`` over pieces."""
    out: Counter = Counter()
    for p in t.pieces:
        if p.perverse is None:
            raise TableError(f"{t.name}: piece {p} has no perverse index")
        out[(p.hodge, p.degree, p.weight - p.degree, p.perverse)] += p.mult
    return PWPolynomial(out)


def mirror_transform(q: PWPolynomial, d: int) -> PWPolynomial:
    """``q(u^-1 t^-2, t, p, w) * u^d t^d``, i.e. (a, s, b, r) -> (d - a, s + d - 2a, r, b).

    >>> str(mirror_transform(PWPolynomial.parse("p^3"), 3))
    'u^3*t^3*w^3'
    """
    out = {}
    for (a, s, b, r), c in q.items():
        if a > d or s + d - 2 * a < 0:
            raise OutOfConeError(f"term with exponents (u,t,w,p) = {(a, s, b, r)} leaves the cone for d={d}")
        out[(d - a, s + d - 2 * a, r, b)] = c
    return PWPolynomial(out)


@dataclass(frozen=True)
class MirrorReport:
    holds: bool
    lhs: PWPolynomial
    rhs: PWPolynomial
    difference: PWPolynomial
    dim: int

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "dim": self.dim,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "difference": str(self.difference),
        }


def verify_mirror_pair(a: PerverseHodgeTable, b: PerverseHodgeTable) -> MirrorReport:
    """Compare the mirror transform of PW(a) against PW(b)."""
    if a.dim != b.dim:
        raise TableError(f"dimension mismatch: {a.name} has {a.dim}, {b.name} has {b.dim}")
    lhs = mirror_transform(pw_polynomial(a), a.dim)
    rhs = pw_polynomial(b)
    diff = lhs - rhs
    return MirrorReport(not diff, lhs, rhs, diff, a.dim)
