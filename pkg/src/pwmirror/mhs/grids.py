"""Hodge-number grids, grid identities under index reflections, and the
f^{p,q} diamond of a threefold Landau-Ginzburg model."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal

from pwmirror.mhs.tables import PerverseHodgeTable

Label = Literal["h-numbers", "f-numbers"]


@dataclass(frozen=True)
class HodgeGrid:
    """Sparse (p, q) -> positive integer map; absent cells are zero."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    label: Label = "h-numbers"

    def __post_init__(self):
        clean = {}
        for (p, q), v in self.entries.items():
            if v < 0:
                raise ValueError(f"negative grid entry at {(p, q)}")
            if v:
                clean[(int(p), int(q))] = int(v)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self.entries.get(tuple(pq), 0)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def to_json(self) -> dict:
        return {"label": self.label, "entries": [[p, q, v] for (p, q), v in self.entries.items()]}

    @classmethod
    def from_json(cls, data) -> "HodgeGrid":
        if isinstance(data, list):
            data = {"entries": data}
        return cls({(p, q): v for p, q, v in data["entries"]}, data.get("label", "h-numbers"))

    def render(self, n: int | None = None) -> str:
        """Diamond layout with h^{n,n} on top and h^{0,0} at the bottom."""
        if n is None:
            n = max((max(p, q) for p, q in self.entries), default=0)
        rows = []
        width = max((len(str(v)) for v in self.entries.values()), default=1)
        for level in range(2 * n, -1, -1):
            cells = [
                str(self[(p, level - p)]).rjust(width)
                for p in range(n, -1, -1)
                if 0 <= level - p <= n
            ]
            pad = " " * ((width + 1) * abs(level - n))
            rows.append(pad + (" " * (width + 2)).join(cells))
        return "\n".join(rows)


def hodge_numbers(t: PerverseHodgeTable, hodge_index: str = "p") -> HodgeGrid:
    """Hodge numbers h^{p,q}: total multiplicity of Gr_F^a H^s with p + q = s.

    With ``hodge_index="p"`` (default) the Hodge filtration index is the first
    coordinate, ``a = p``; with ``"q"`` it is the second, ``a = q``.
    """
    if hodge_index not in ("p", "q"):
        raise ValueError("hodge_index must be 'p' or 'q'")
    out: Counter = Counter()
    for piece in t.pieces:
        a, s = piece.hodge, piece.degree
        cell = (a, s - a) if hodge_index == "p" else (s - a, a)
        out[cell] += piece.mult
    return HodgeGrid(dict(out), "h-numbers")


_TRANSFORM = re.compile(r"^\s*(logCY|fano|boundary)\s*\(\s*(-?\d+)\s*\)\s*$|^\s*identity\s*$")


def grid_transform(spec: str) -> Callable[[int, int], tuple[int, int]]:
    """``logCY(d)``: (d-p, q); ``fano(n)``: (n-p, q); ``boundary(n)``: (n-1-p, q); ``identity``."""
    m = _TRANSFORM.match(spec)
    if m is None:
        raise ValueError(f"unknown grid transform {spec!r}")
    name, arg = m.group(1), m.group(2)
    if name is None:
        return lambda p, q: (p, q)
    n = int(arg)
    shift = n - 1 if name == "boundary" else n
    return lambda p, q: (shift - p, q)


@dataclass(frozen=True)
class GridReport:
    holds: bool
    transform: str
    mismatches: list[tuple[tuple[int, int], int, int]]

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "transform": self.transform,
            "mismatches": [{"pq": list(pq), "a": va, "b": vb} for pq, va, vb in self.mismatches],
        }


def check_grid_equality(ga: HodgeGrid, gb: HodgeGrid, transform: str) -> GridReport:
    """Check ``ga[p, q] == gb[T(p, q)]`` on every cell where either side is nonzero.

    Every transform offered is an involution, so cells of ``gb`` are pulled back
    through ``T`` itself.
    """
    T = grid_transform(transform)
    cells = set(ga.entries) | {T(*pq) for pq in gb.entries}
    mismatches = []
    for pq in sorted(cells):
        va, vb = ga[pq], gb[T(*pq)]
        if va != vb:
            mismatches.append((pq, va, vb))
    return GridReport(not mismatches, transform, mismatches)


@dataclass(frozen=True)
class DiamondParams:
    k_Y: int
    ph: int
    h12: int = 0
    h21: int = 0

    def __post_init__(self):
        if self.ph < 2:
            raise ValueError("ph must be at least 2")
        if min(self.k_Y, self.h12, self.h21) < 0:
            raise ValueError("k_Y, h12 and h21 must be nonnegative")


def fpq_diamond(params: DiamondParams) -> HodgeGrid:
    """f^{p,q} numbers of a compactified threefold Landau-Ginzburg model.

    Nonzero cells: f^{1,1} = f^{2,2} = k_Y, f^{3,0} = f^{0,3} = 1,
    f^{2,1} = ph - 2 + h12, f^{1,2} = ph - 2 + h21.
    """
    e = params.ph - 2
    return HodgeGrid(
        {
            (1, 1): params.k_Y,
            (2, 2): params.k_Y,
            (3, 0): 1,
            (0, 3): 1,
            (2, 1): e + params.h12,
            (1, 2): e + params.h21,
        },
        "f-numbers",
    )


def k_Y_from_fibers(fibers: Iterable[tuple[object, int]]) -> int:
    """Sum of (number of fiber components - 1) over critical values."""
    total = 0
    for label, rho in fibers:
        if rho < 1:
            raise ValueError(f"fiber over {label!r} has {rho} components; need at least 1")
        total += rho - 1
    return total
