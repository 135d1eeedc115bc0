"""Graded mixed Hodge structure tables carrying optional perverse indices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable, Literal, Optional

Kind = Literal["ordinary", "compact"]


class TableError(ValueError):
    """A table or piece violates its invariants, or an operation's precondition."""


@dataclass(frozen=True)
class HodgePiece:
    """``mult`` copies of Gr_F^hodge Gr^W_weight (Gr^P_perverse) H^degree.

    ``weight`` is the honest weight; the PW polynomial's ``b`` exponent is
    ``weight - degree``.
    """

    degree: int
    hodge: int
    weight: int
    perverse: Optional[int] = None
    mult: int = 1

    def __post_init__(self):
        if self.mult < 1:
            raise TableError(f"multiplicity must be positive: {self}")
        if self.degree < 0:
            raise TableError(f"negative degree: {self}")
        if not 0 <= self.hodge <= self.weight:
            raise TableError(f"need 0 <= hodge <= weight: {self}")
        if self.perverse is not None and self.perverse < 0:
            raise TableError(f"negative perverse index: {self}")

    @property
    def slot(self) -> tuple[int, int]:
        return (self.hodge, self.weight)

    @property
    def key(self) -> tuple[int, int, int, Optional[int]]:
        return (self.degree, self.hodge, self.weight, self.perverse)

    def is_tate(self) -> bool:
        return self.weight == 2 * self.hodge


@dataclass(frozen=True)
class TateSummand:
    """``mult`` copies of Q(-twist) in cohomological degree ``degree``."""

    degree: int
    twist: int
    mult: int = 1
    perverse: Optional[int] = None

    def piece(self) -> HodgePiece:
        return HodgePiece(self.degree, self.twist, 2 * self.twist, self.perverse, self.mult)


def _sort_key(key):
    s, a, w, r = key
    return (s, a, w, -1 if r is None else r)


def merge_pieces(pieces: Iterable[HodgePiece]) -> tuple[HodgePiece, ...]:
    counts: Counter = Counter()
    for p in pieces:
        counts[p.key] += p.mult
    return tuple(
        HodgePiece(s, a, w, r, m)
        for (s, a, w, r), m in sorted(counts.items(), key=lambda kv: _sort_key(kv[0]))
    )


@dataclass(frozen=True)
class PerverseHodgeTable:
    name: str
    dim: int
    kind: Kind = "ordinary"
    pieces: tuple[HodgePiece, ...] = field(default=())

    def __post_init__(self):
        if self.dim < 0:
            raise TableError("dimension must be nonnegative")
        if self.kind not in ("ordinary", "compact"):
            raise TableError(f"unknown kind {self.kind!r}")
        merged = merge_pieces(self.pieces)
        for p in merged:
            if p.degree > 2 * self.dim:
                raise TableError(f"{self.name}: degree {p.degree} exceeds 2*dim = {2 * self.dim}")
        object.__setattr__(self, "pieces", merged)

    @property
    def total_dim(self) -> int:
        return sum(p.mult for p in self.pieces)

    def has_perverse(self) -> bool:
        return all(p.perverse is not None for p in self.pieces)

    def degree_dims(self) -> dict[int, int]:
        out: Counter = Counter()
        for p in self.pieces:
            out[p.degree] += p.mult
        return dict(sorted(out.items()))

    def graded(self, degree: int) -> dict[tuple[int, int], int]:
        """(hodge, weight) -> dimension in one degree, perverse data summed out."""
        out: Counter = Counter()
        for p in self.pieces:
            if p.degree == degree:
                out[p.slot] += p.mult
        return dict(sorted(out.items()))

    def strip_perverse(self) -> "PerverseHodgeTable":
        return replace(self, pieces=tuple(replace(p, perverse=None) for p in self.pieces))

    def renamed(self, name: str) -> "PerverseHodgeTable":
        return replace(self, name=name)

    def __add__(self, other: "PerverseHodgeTable") -> "PerverseHodgeTable":
        """Multiset union; both tables must share dimension and kind."""
        if (self.dim, self.kind) != (other.dim, other.kind):
            raise TableError("union needs equal dimension and kind")
        return PerverseHodgeTable(f"{self.name}+{other.name}", self.dim, self.kind, self.pieces + other.pieces)

    def describe(self) -> str:
        lines = [f"{self.name}: dim {self.dim}, {self.kind}, total {self.total_dim}"]
        h = "H_c" if self.kind == "compact" else "H"
        for p in self.pieces:
            typ = f"Q(-{p.hodge})" if p.is_tate() else f"(F={p.hodge}, W={p.weight})"
            typ = typ.replace("Q(-0)", "Q(0)")
            perv = "" if p.perverse is None else f"  P={p.perverse}"
            lines.append(f"  {h}^{p.degree}: {typ}^{p.mult}{perv}")
        return "\n".join(lines)


def table_from_tate(dim: int, kind: Kind, summands: Iterable[TateSummand], name: str = "") -> PerverseHodgeTable:
    """Expand ``Q(-k)^m`` summands into a table.

    >>> table_from_tate(3, "compact", [TateSummand(4, 2, 21)]).pieces
    (HodgePiece(degree=4, hodge=2, weight=4, perverse=None, mult=21),)
    """
    pieces = []
    for s in summands:
        if s.degree > 2 * dim:
            raise TableError(f"degree {s.degree} out of range for dimension {dim}")
        pieces.append(s.piece())
    return PerverseHodgeTable(name, dim, kind, tuple(pieces))


def poincare_dual(t: PerverseHodgeTable) -> PerverseHodgeTable:
    """Exchange ordinary and compact support: (s, a, w) -> (2d - s, d - a, 2d - w).

    Perverse indices are dropped.
    """
    d = t.dim
    pieces = []
    for p in t.pieces:
        if p.hodge > d or p.weight > 2 * d or p.weight - p.hodge > d:
            raise TableError(f"{t.name}: piece {p} is outside the dualizable range for dim {d}")
        pieces.append(HodgePiece(2 * d - p.degree, d - p.hodge, 2 * d - p.weight, None, p.mult))
    kind: Kind = "ordinary" if t.kind == "compact" else "compact"
    return PerverseHodgeTable(t.name, d, kind, tuple(pieces))


def tate_twist(t: PerverseHodgeTable, k: int) -> PerverseHodgeTable:
    """Tensor with Q(-k): hodge += k, weight += 2k."""
    pieces = []
    for p in t.pieces:
        if p.hodge + k < 0 or p.weight + 2 * k < 0:
            raise TableError(f"twist by {k} makes {p} negative")
        pieces.append(replace(p, hodge=p.hodge + k, weight=p.weight + 2 * k))
    return replace(t, pieces=tuple(pieces))


def affine_perverse(t: PerverseHodgeTable) -> PerverseHodgeTable:
    """Perverse indices of an affine variety for the identity map: r = d - s."""
    d = t.dim
    pieces = []
    for p in t.pieces:
        if p.degree > d:
            raise TableError(f"{t.name}: degree {p.degree} above the middle dimension {d}")
        pieces.append(replace(p, perverse=d - p.degree))
    return replace(t, pieces=tuple(pieces))
