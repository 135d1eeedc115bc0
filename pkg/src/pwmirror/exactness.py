"""Dimension solver for long exact sequences of mixed Hodge structures.

Morphisms of mixed Hodge structures are strict, so a long exact sequence
splits into one exact sequence of vector spaces per (hodge, weight) slot.
Each slot is a finite chain of nodes with known or unknown dimension;
exactness says ``dim(node) = rank(in) + rank(out)`` with zero ranks at both
ends. The solver finds every value an unknown can take over all consistent
rank assignments.

Two patterns are supported, with unknown X:

* ``triple-compact``: ... -> X^i -> A^i -> B^i -> X^{i+1} -> ...
* ``residue``: ... -> B^{i-2}(-1) -> A^i -> X^i -> B^{i-1}(-1) -> A^{i+1} -> ...
  (A = H(ambient), B = H(divisor), X = H(complement); the Gysin arrow
  carries a Tate twist by -1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional, Sequence

from pwmirror.mhs.tables import HodgePiece, PerverseHodgeTable, tate_twist

Pattern = Literal["triple-compact", "residue"]

# arrows leaving each role, in row order
_ARROWS = {
    "triple-compact": (("X", "A"), ("A", "B"), ("B", "X")),
    "residue": (("B", "A"), ("A", "X"), ("X", "B")),
}


class InconsistentSequenceError(ValueError):
    def __init__(self, slot, message="no rank assignment is exact"):
        self.slot = slot
        super().__init__(f"slot (hodge={slot[0]}, weight={slot[1]}): {message}")


@dataclass(frozen=True)
class RankHint:
    """Rank of the arrow leaving ``edge``'s source role in row ``degree`` of one slot."""

    hodge: int
    weight: int
    degree: int
    edge: str
    rank: int

    @property
    def slot(self) -> tuple[int, int]:
        return (self.hodge, self.weight)

    def to_json(self) -> dict:
        return {
            "hodge": self.hodge,
            "weight": self.weight,
            "degree": self.degree,
            "edge": self.edge,
            "rank": self.rank,
        }


@dataclass(frozen=True)
class Node:
    role: str
    degree: int
    dim: Optional[int]  # None marks an unknown

    @property
    def id(self) -> str:
        return f"{self.role}{self.degree}"


@dataclass(frozen=True)
class SlotSequence:
    slot: tuple[int, int]
    pattern: str
    nodes: tuple[Node, ...]

    @property
    def unknowns(self) -> list[str]:
        return [n.id for n in self.nodes if n.dim is None]

    def known_entries(self) -> list[tuple[str, int]]:
        return [(n.id, n.dim) for n in self.nodes if n.dim]

    def edge_index(self, edge: str, degree: int) -> int:
        """Index ``j`` of the arrow node[j] -> node[j+1] named by ``edge`` at ``degree``."""
        src, dst = _normalize_edge(self.pattern, edge)
        for j in range(len(self.nodes) - 1):
            a, b = self.nodes[j], self.nodes[j + 1]
            if a.role == src and b.role == dst and _row(self.pattern, a) == degree:
                return j
        raise ValueError(f"no arrow {src}->{dst} at degree {degree} in slot {self.slot}")

    def compact(self) -> str:
        """Entries as ``X2=?, A2=3, ...`` with the zero-only edges trimmed."""
        idx = [j for j, n in enumerate(self.nodes) if n.dim != 0]
        if not idx:
            return "0"
        lo, hi = max(idx[0] - 1, 0), min(idx[-1] + 1, len(self.nodes) - 1)
        parts = [f"{n.id}={'?' if n.dim is None else n.dim}" for n in self.nodes[lo : hi + 1]]
        return ", ".join(parts)


def _row(pattern: str, node: Node) -> int:
    # the residue pattern places B^{i-2}(-1) in row i
    if pattern == "residue" and node.role == "B":
        return node.degree + 2
    return node.degree


def _normalize_edge(pattern: str, edge: str) -> tuple[str, str]:
    try:
        src, dst = (s.strip() for s in edge.split("->"))
    except ValueError:
        raise ValueError(f"malformed edge {edge!r}") from None
    for a, b in _ARROWS[pattern]:
        if {a, b} == {src, dst}:
            return a, b
    raise ValueError(f"edge {edge!r} does not exist in the {pattern} pattern")


@dataclass
class LESProblem:
    pattern: Pattern
    A: PerverseHodgeTable
    B: PerverseHodgeTable
    rank_hints: list[RankHint] = field(default_factory=list)

    def __post_init__(self):
        if self.pattern not in _ARROWS:
            raise ValueError(f"unknown pattern {self.pattern!r}")
        for h in self.rank_hints:
            _normalize_edge(self.pattern, h.edge)
            if h.rank < 0:
                raise ValueError(f"negative rank in hint {h}")

    @property
    def dim(self) -> int:
        return self.A.dim

    def _b_table(self) -> PerverseHodgeTable:
        return tate_twist(self.B, 1) if self.pattern == "residue" else self.B

    def rows(self) -> int:
        b = self._b_table()
        top = max([2 * self.A.dim] + [p.degree for p in self.A.pieces])
        bdeg = [p.degree for p in b.pieces]
        if self.pattern == "residue":
            top = max([top] + [d + 2 for d in bdeg])
        else:
            top = max([top, 2 * self.B.dim] + bdeg)
        return top


def split_slots(problem: LESProblem) -> list[SlotSequence]:
    """One sequence per (hodge, weight) slot met in a known table or a hint."""
    b_table = problem._b_table()
    slots = {p.slot for p in problem.A.pieces} | {p.slot for p in b_table.pieces}
    slots |= {h.slot for h in problem.rank_hints}
    top = problem.rows()
    out = []
    for slot in sorted(slots):
        a_dims = _slot_dims(problem.A.pieces, slot)
        b_dims = _slot_dims(b_table.pieces, slot)
        nodes = []
        for i in range(top + 1):
            if problem.pattern == "triple-compact":
                nodes += [Node("X", i, None), Node("A", i, a_dims.get(i, 0)), Node("B", i, b_dims.get(i, 0))]
            else:
                nodes += [Node("B", i - 2, b_dims.get(i - 2, 0)), Node("A", i, a_dims.get(i, 0)), Node("X", i, None)]
        out.append(SlotSequence(slot, problem.pattern, tuple(nodes)))
    return out


def _slot_dims(pieces: Iterable[HodgePiece], slot) -> dict[int, int]:
    dims: dict[int, int] = {}
    for p in pieces:
        if p.slot == slot:
            dims[p.degree] = dims.get(p.degree, 0) + p.mult
    return dims


@dataclass(frozen=True)
class SlotResult:
    slot: tuple[int, int]
    status: str  # forced | hinted | underdetermined
    values: dict[str, tuple[int, ...]]

    def forced(self) -> dict[str, int]:
        return {k: v[0] for k, v in self.values.items() if len(v) == 1}

    def open(self) -> dict[str, tuple[int, int]]:
        return {k: (v[0], v[-1]) for k, v in self.values.items() if len(v) > 1}

    def to_json(self) -> dict:
        return {
            "hodge": self.slot[0],
            "weight": self.slot[1],
            "status": self.status,
            "values": {k: list(v) for k, v in self.values.items()},
        }


def solve_slot(seq: SlotSequence, hints: Sequence[RankHint] = ()) -> SlotResult:
    """Admissible values of every unknown in one slot.

    Works by dynamic programming over the incoming rank at each node: a state
    survives if it is reachable from the left end and can be completed to the
    right end with a zero final rank.
    """
    nodes = seq.nodes
    n = len(nodes)
    fixed: dict[int, int] = {}
    for h in hints:
        j = seq.edge_index(h.edge, h.degree)
        if fixed.get(j, h.rank) != h.rank:
            raise InconsistentSequenceError(seq.slot, f"conflicting hints on arrow {j}")
        fixed[j] = h.rank

    def outgoing(j: int, r_in: int) -> list[int]:
        node = nodes[j]
        if j == n - 1:
            cands = [0]
        elif node.dim is not None:
            cands = [node.dim - r_in]
        elif j in fixed:
            cands = [fixed[j]]
        else:
            nxt = nodes[j + 1]
            if nxt.dim is None:
                raise ValueError(f"adjacent unknowns {node.id}, {nxt.id} leave the rank unbounded")
            cands = range(nxt.dim + 1)
        return [
            r
            for r in cands
            if r >= 0
            and fixed.get(j, r) == r
            and (node.dim is None or r_in + r == node.dim)
        ]

    if n == 0:
        return SlotResult(seq.slot, "forced", {})
    # forward[j]: incoming ranks at node j reachable from the left end
    forward: list[set[int]] = [set() for _ in range(n + 1)]
    forward[0] = {0}
    for j in range(n):
        for r_in in forward[j]:
            forward[j + 1].update(outgoing(j, r_in))
    if 0 not in forward[n]:
        raise InconsistentSequenceError(seq.slot)
    # backward pass keeps only states that finish at rank 0
    alive: list[set[int]] = [set() for _ in range(n + 1)]
    alive[n] = {0}
    values: dict[str, set[int]] = {}
    for j in range(n - 1, -1, -1):
        node = nodes[j]
        for r_in in forward[j]:
            outs = [r for r in outgoing(j, r_in) if r in alive[j + 1]]
            if outs:
                alive[j].add(r_in)
            if node.dim is None:
                values.setdefault(node.id, set()).update(r_in + r for r in outs)
    result = {nodes[j].id: tuple(sorted(values[nodes[j].id])) for j in range(n) if nodes[j].dim is None}
    if any(not v for v in result.values()):
        raise InconsistentSequenceError(seq.slot)
    if all(len(v) == 1 for v in result.values()):
        status = "hinted" if fixed else "forced"
    else:
        status = "underdetermined"
    return SlotResult(seq.slot, status, result)


@dataclass(frozen=True)
class Solution:
    solved: PerverseHodgeTable
    slots: tuple[SlotResult, ...]

    @property
    def complete(self) -> bool:
        return all(s.status != "underdetermined" for s in self.slots)

    def underdetermined(self) -> list[SlotResult]:
        return [s for s in self.slots if s.status == "underdetermined"]

    def to_json(self) -> dict:
        from pwmirror.catalog import table_to_json

        return {
            "complete": self.complete,
            "solved": table_to_json(self.solved),
            "slots": [s.to_json() for s in self.slots],
        }


def solve(problem: LESProblem, name: str = "X") -> Solution:
    """Solve every slot and assemble the forced dimensions of X into a table.

    Unknowns that are not forced are left out of the table and reported in
    the slot results with their admissible values.
    """
    by_slot: dict[tuple[int, int], list[RankHint]] = {}
    for h in problem.rank_hints:
        by_slot.setdefault(h.slot, []).append(h)
    results = []
    pieces = []
    for seq in split_slots(problem):
        res = solve_slot(seq, by_slot.get(seq.slot, ()))
        results.append(res)
        a, w = seq.slot
        for uid, v in res.forced().items():
            if v:
                pieces.append(HodgePiece(int(uid[1:]), a, w, None, v))
    kind = "compact" if problem.pattern == "triple-compact" else "ordinary"
    table = PerverseHodgeTable(name, problem.dim, kind, tuple(pieces))
    return Solution(table, tuple(results))


def check_exact(dims: Sequence[int], ranks: Sequence[int]) -> bool:
    """True iff ``dims[i] == ranks[i] + ranks[i+1]`` with zero ranks at both ends."""
    if not dims:
        return all(r == 0 for r in ranks)
    if len(ranks) != len(dims) + 1:
        raise ValueError("need exactly one more rank than dimensions")
    if ranks[0] != 0 or ranks[-1] != 0 or any(r < 0 for r in ranks):
        return False
    return all(d == ranks[i] + ranks[i + 1] for i, d in enumerate(dims))
