"""Built-in tables, standard varieties, and the JSON table/problem formats."""

from __future__ import annotations

import json
import re
import warnings
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from pwmirror.exactness import LESProblem, RankHint
from pwmirror.mhs.tables import (
    HodgePiece,
    PerverseHodgeTable,
    TableError,
    TateSummand,
    affine_perverse,
    table_from_tate,
)

T = TateSummand


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    table: PerverseHodgeTable
    provenance: str


def _ycirc() -> PerverseHodgeTable:
    return table_from_tate(
        3,
        "ordinary",
        [
            T(0, 0, 1, perverse=2),
            T(2, 1, 2, perverse=0),
            T(2, 1, 8, perverse=1),
            T(2, 2, 1, perverse=1),
            T(2, 1, 1, perverse=2),
            T(3, 3, 1, perverse=0),
            T(4, 2, 2, perverse=0),
        ],
        name="Ycirc",
    )


def _u22() -> PerverseHodgeTable:
    pieces = [
        HodgePiece(0, 0, 0),
        HodgePiece(1, 1, 2),
        # H^1(E)(-2)
        HodgePiece(3, 2, 5),
        HodgePiece(3, 3, 5),
        HodgePiece(3, 2, 4, mult=8),
        # H^3(X) = H^1(genus 2 curve)(-1)
        HodgePiece(3, 1, 3, mult=2),
        HodgePiece(3, 2, 3, mult=2),
    ]
    return affine_perverse(PerverseHodgeTable("U22", 3, "ordinary", tuple(pieces)))


def _y22c() -> PerverseHodgeTable:
    return table_from_tate(3, "compact", [T(6, 3), T(4, 2, 21), T(3, 0), T(2, 1, 3)], name="Y22c")


def cycle_In_times_line(n: int) -> PerverseHodgeTable:
    """Compactly supported cohomology of (cycle of n rational curves) x C."""
    if n < 1:
        raise ValueError("cycle length must be at least 1")
    return table_from_tate(2, "compact", [T(2, 1), T(3, 1), T(4, 2, n)], name=f"I{n}xC")


_BUILTIN = {
    "point": (
        lambda: table_from_tate(0, "ordinary", [T(0, 0, 1, perverse=0)], name="point"),
        "a point: H^0 = Q(0), perverse index 0",
    ),
    "Ycirc": (
        _ycirc,
        "complement Y° of the horizontal divisor in the LG model of the (2,2) complete "
        "intersection threefold: H^0 = Q(0); H^2 graded Q(-1)^11 + Q(-2); H^3 = Q(-3); "
        "H^4 = Q(-2)^2; perverse indices from restrictions to the flag preimages Y_1, Y_2 "
        "(H^2 -> H^2(Y_2) taken surjective)",
    ),
    "U22": (
        _u22,
        "U = X minus two hyperplane sections, X the (2,2) complete intersection in P^5: "
        "Gr^W_0 H^0 = Q(0), Gr^W_2 H^1 = Q(-1), Gr^W_5 H^3 = H^1(E)(-2), "
        "Gr^W_4 H^3 = Q(-2)^8, Gr^W_3 H^3 = H^3(X) with h^{1,2} = h^{2,1} = 2; "
        "U affine, so P_{3-i} H^i = H^i",
    ),
    "Y22c": (
        _y22c,
        "compactly supported cohomology of the compactified LG model Y: "
        "H^6_c = Q(-3), H^4_c = Q(-2)^21, H^3_c = Q(0), H^2_c = Q(-1)^3",
    ),
    "Dh": (
        lambda: cycle_In_times_line(10).renamed("Dh"),
        "horizontal divisor D_h = I_10 x C: H^2_c = Q(-1), H^3_c = Q(-1), H^4_c = Q(-2)^10",
    ),
}


def builtin_keys() -> list[str]:
    return sorted(_BUILTIN)


def catalog_entry(key: str) -> CatalogEntry:
    if key not in _BUILTIN:
        raise KeyError(f"unknown catalog key {key!r}; available: {', '.join(builtin_keys())}")
    make, prov = _BUILTIN[key]
    return CatalogEntry(key, make(), prov)


def builtin(key: str) -> PerverseHodgeTable:
    """A fresh copy of a catalog table (tables are immutable, so this is the value)."""
    return catalog_entry(key).table


_STANDARD = re.compile(r"^\s*([A-Za-z_0-9]+?)\s*(?:\(\s*(\d+)\s*\))?\s*$")


def standard(kind: str, n: int | None = None) -> PerverseHodgeTable:
    """Graded tables of standard varieties.

    ``kind`` is one of point, line, torus1, elliptic_curve, curve(g),
    projective_space(n), del_pezzo(deg), K3, cycle_In_times_line(n); the
    parameter may be given inline (``"curve(2)"``) or as ``n``.

    >>> standard("projective_space", 2).degree_dims()
    {0: 1, 2: 1, 4: 1}
    """
    m = _STANDARD.match(kind)
    if m is None:
        raise ValueError(f"unknown standard variety {kind!r}")
    kind, inline = m.group(1), m.group(2)
    if inline is not None:
        n = int(inline)

    def need(lo: int, hi: int | None = None) -> int:
        if n is None or n < lo or (hi is not None and n > hi):
            rng = f"[{lo}, {hi}]" if hi is not None else f">= {lo}"
            raise ValueError(f"{kind} needs a parameter in {rng}, got {n}")
        return n

    if kind == "point":
        return table_from_tate(0, "ordinary", [T(0, 0)], name="point")
    if kind == "line":
        return table_from_tate(1, "ordinary", [T(0, 0)], name="A1")
    if kind == "torus1":
        return table_from_tate(1, "ordinary", [T(0, 0), T(1, 1)], name="Gm")
    if kind in ("elliptic_curve", "curve"):
        g = 1 if kind == "elliptic_curve" else need(0)
        pieces = [HodgePiece(0, 0, 0), HodgePiece(2, 1, 2)]
        if g:
            pieces += [HodgePiece(1, 0, 1, mult=g), HodgePiece(1, 1, 1, mult=g)]
        return PerverseHodgeTable("E" if kind == "elliptic_curve" else f"C{g}", 1, "ordinary", tuple(pieces))
    if kind == "projective_space":
        k = need(1)
        return table_from_tate(k, "ordinary", [T(2 * i, i) for i in range(k + 1)], name=f"P{k}")
    if kind == "del_pezzo":
        deg = need(1, 9)
        return table_from_tate(2, "ordinary", [T(0, 0), T(2, 1, 10 - deg), T(4, 2)], name=f"dP{deg}")
    if kind == "K3":
        pieces = [
            HodgePiece(0, 0, 0),
            HodgePiece(2, 0, 2),
            HodgePiece(2, 1, 2, mult=20),
            HodgePiece(2, 2, 2),
            HodgePiece(4, 2, 4),
        ]
        return PerverseHodgeTable("K3", 2, "ordinary", tuple(pieces))
    if kind == "cycle_In_times_line":
        return cycle_In_times_line(need(1))
    raise ValueError(f"unknown standard variety {kind!r}")


# --- JSON formats -----------------------------------------------------------

_PIECE_SCHEMA = {
    "oneOf": [
        {
            "type": "object",
            "required": ["degree", "tate", "mult"],
            "properties": {
                "degree": {"type": "integer", "minimum": 0},
                "tate": {"type": "integer", "minimum": 0},
                "mult": {"type": "integer", "minimum": 1},
                "perverse": {"type": ["integer", "null"], "minimum": 0},
            },
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["degree", "hodge", "weight", "mult"],
            "properties": {
                "degree": {"type": "integer", "minimum": 0},
                "hodge": {"type": "integer", "minimum": 0},
                "weight": {"type": "integer", "minimum": 0},
                "mult": {"type": "integer", "minimum": 1},
                "perverse": {"type": ["integer", "null"], "minimum": 0},
            },
            "additionalProperties": False,
        },
    ]
}

TABLE_SCHEMA = {
    "type": "object",
    "required": ["name", "dim", "kind", "pieces"],
    "properties": {
        "name": {"type": "string"},
        "dim": {"type": "integer", "minimum": 0},
        "kind": {"enum": ["ordinary", "compact"]},
        "pieces": {"type": "array", "items": _PIECE_SCHEMA},
        "provenance": {"type": "string"},
    },
}

_HINT_SCHEMA = {
    "type": "object",
    "required": ["hodge", "weight", "degree", "edge", "rank"],
    "properties": {
        "hodge": {"type": "integer"},
        "weight": {"type": "integer"},
        "degree": {"type": "integer"},
        "edge": {"type": "string", "pattern": r"^\s*[ABX]\s*->\s*[ABX]\s*$"},
        "rank": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

PROBLEM_SCHEMA = {
    "type": "object",
    "required": ["pattern", "A", "B"],
    "properties": {
        "pattern": {"enum": ["triple-compact", "residue"]},
        "A": {"type": ["string", "object"]},
        "B": {"type": ["string", "object"]},
        "rank_hints": {"type": "array", "items": _HINT_SCHEMA},
        "name": {"type": "string"},
        "provenance": {"type": "string"},
    },
}


class SchemaError(ValueError):
    def __init__(self, message: str, path: str = "$"):
        self.path = path
        super().__init__(f"{path}: {message}")


def _validate(data: Any, schema: dict, root: str = "$") -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        path = root + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)
        raise SchemaError(err.message, path)


def table_from_json(data: Any, root: str = "$") -> PerverseHodgeTable:
    _validate(data, TABLE_SCHEMA, root)
    pieces = []
    for i, raw in enumerate(data["pieces"]):
        path = f"{root}.pieces[{i}]"
        if "tate" in raw:
            a, w = raw["tate"], 2 * raw["tate"]
        else:
            a, w = raw["hodge"], raw["weight"]
            if w < a:
                raise SchemaError(f"weight {w} is smaller than hodge {a}", path + ".weight")
        try:
            pieces.append(HodgePiece(raw["degree"], a, w, raw.get("perverse"), raw["mult"]))
        except TableError as exc:
            raise SchemaError(str(exc), path) from None
    keys = Counter((p.degree, p.hodge, p.weight, p.perverse) for p in pieces)
    dups = sorted(k for k, c in keys.items() if c > 1)
    if dups:
        warnings.warn(f"{root}: duplicate pieces {dups} merged", stacklevel=2)
    try:
        return PerverseHodgeTable(data["name"], data["dim"], data["kind"], tuple(pieces))
    except TableError as exc:
        raise SchemaError(str(exc), root) from None


def table_to_json(t: PerverseHodgeTable) -> dict:
    pieces = []
    for p in t.pieces:
        row: dict[str, int] = {"degree": p.degree}
        if p.is_tate():
            row["tate"] = p.hodge
        else:
            row["hodge"], row["weight"] = p.hodge, p.weight
        row["mult"] = p.mult
        if p.perverse is not None:
            row["perverse"] = p.perverse
        pieces.append(row)
    return {"name": t.name, "dim": t.dim, "kind": t.kind, "pieces": pieces}


def load_table(path) -> PerverseHodgeTable:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return table_from_json(data)


def save_table(t: PerverseHodgeTable, path) -> None:
    Path(path).write_text(json.dumps(table_to_json(t), indent=2) + "\n", encoding="utf-8")


def resolve_table(ref) -> PerverseHodgeTable:
    """Catalog key, standard-variety name, inline dict, or path to a table file."""
    if isinstance(ref, PerverseHodgeTable):
        return ref
    if isinstance(ref, dict):
        return table_from_json(ref)
    if ref in _BUILTIN:
        return builtin(ref)
    if not Path(ref).exists():
        try:
            return standard(ref)
        except ValueError:
            pass
    return load_table(ref)


def problem_from_json(data: Any, base: Path | None = None) -> LESProblem:
    _validate(data, PROBLEM_SCHEMA)

    def side(role: str) -> PerverseHodgeTable:
        ref = data[role]
        if isinstance(ref, dict):
            return table_from_json(ref, f"$.{role}")
        if ref not in _BUILTIN and base is not None and (base / ref).exists():
            ref = str(base / ref)
        return resolve_table(ref)

    hints = [RankHint(**h) for h in data.get("rank_hints", [])]
    return LESProblem(data["pattern"], side("A"), side("B"), hints)


def problem_to_json(problem: LESProblem) -> dict:
    return {
        "pattern": problem.pattern,
        "A": table_to_json(problem.A),
        "B": table_to_json(problem.B),
        "rank_hints": [h.to_json() for h in problem.rank_hints],
    }


def builtin_problem_keys() -> list[str]:
    return sorted(p.name[: -len(".json")] for p in resources.files("pwmirror.data").iterdir() if p.name.endswith(".json"))


def builtin_problem(key: str) -> LESProblem:
    res = resources.files("pwmirror.data") / f"{key}.json"
    if not res.is_file():
        raise KeyError(f"unknown problem {key!r}; available: {', '.join(builtin_problem_keys())}")
    return problem_from_json(json.loads(res.read_text(encoding="utf-8")))


def load_problem(ref) -> LESProblem:
    """Path to a problem file, or the key of a bundled problem."""
    path = Path(ref)
    if path.exists():
        with open(path, encoding="utf-8") as fh:
            return problem_from_json(json.load(fh), path.parent)
    return builtin_problem(str(ref))
