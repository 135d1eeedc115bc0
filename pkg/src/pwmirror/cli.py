"""Command-line front end.

Exit status: 0 on success or HOLDS, 1 when a check FAILS or an exact sequence
is underdetermined, 2 on usage or input errors. Results go to stdout, errors
to stderr. Every subcommand takes ``--json``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from pwmirror import catalog
from pwmirror.exactness import InconsistentSequenceError, solve
from pwmirror.mhs import (
    DiamondParams,
    HodgeGrid,
    PWPolynomial,
    check_grid_equality,
    fpq_diamond,
    hodge_numbers,
    mirror_transform,
    pw_polynomial,
    verify_mirror_pair,
)
from pwmirror.poly import parse_expr, period_sequence


class UsageError(Exception):
    pass


def _emit(args, command: str, text: str, result, holds: bool | None = None) -> None:
    if args.json:
        env = {"command": command, "result": result}
        if holds is not None:
            env["holds"] = holds
        print(json.dumps(env, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_compute(args) -> int:
    t = catalog.resolve_table(args.table)
    q = pw_polynomial(t)
    _emit(args, "compute", str(q), {"table": t.name, "dim": t.dim, "pw": str(q), "terms": q.to_json()})
    return 0


def cmd_mirror(args) -> int:
    if args.table is not None:
        t = catalog.resolve_table(args.table)
        q = pw_polynomial(t)
        d = t.dim if args.dim is None else args.dim
    else:
        if args.dim is None:
            raise UsageError("--dim is required with --poly")
        q = PWPolynomial.parse(args.poly)
        d = args.dim
    out = mirror_transform(q, d)
    _emit(args, "mirror", str(out), {"dim": d, "input": str(q), "pw": str(out), "terms": out.to_json()})
    return 0


def cmd_verify(args) -> int:
    a = catalog.resolve_table(args.side_a)
    b = catalog.resolve_table(args.side_b)
    rep = verify_mirror_pair(a, b)
    verdict = "HOLDS" if rep.holds else "FAILS"
    text = "\n".join(
        [
            f"mirror({a.name}): {rep.lhs}",
            f"PW({b.name}): {rep.rhs}",
            f"difference: {rep.difference}",
            verdict,
        ]
    )
    _emit(args, "verify", text, rep.to_json() | {"side_a": a.name, "side_b": b.name}, rep.holds)
    return 0 if rep.holds else 1


def cmd_period(args) -> int:
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    expr = parse_expr(args.expr, names)
    if not expr.is_polynomial():
        raise UsageError("period needs a Laurent polynomial (monomial denominators only)")
    seq = period_sequence(expr.numerator, args.max_n, prune=args.prune)
    _emit(args, "period", " ".join(map(str, seq)), {"expr": str(expr), "vars": names, "periods": seq})
    return 0


def cmd_les(args) -> int:
    problem = catalog.load_problem(args.problem)
    sol = solve(problem)
    lines = [sol.solved.describe(), "slots:"]
    for s in sol.slots:
        detail = ", ".join(
            f"{k}={v[0]}" if len(v) == 1 else f"{k} in {{{', '.join(map(str, v))}}}"
            for k, v in s.values.items()
            if v != (0,)
        )
        lines.append(f"  (hodge={s.slot[0]}, weight={s.slot[1]}) {s.status}: {detail or 'all zero'}")
    lines.append("COMPLETE" if sol.complete else "UNDERDETERMINED")
    _emit(args, "les", "\n".join(lines), sol.to_json(), sol.complete)
    return 0 if sol.complete else 1


def cmd_diamond(args) -> int:
    grid = fpq_diamond(DiamondParams(args.ky, args.ph, args.h12, args.h21))
    _emit(args, "diamond", grid.render(3), grid.to_json())
    return 0


def _grid(ref: str) -> HodgeGrid:
    path = Path(ref)
    if path.suffix == ".json" and path.exists():
        data = json.loads(path.read_text(encoding="utf-8"))
        if isinstance(data, list) or "entries" in data:
            return HodgeGrid.from_json(data)
    return hodge_numbers(catalog.resolve_table(ref))


def cmd_grids(args) -> int:
    rep = check_grid_equality(_grid(args.a), _grid(args.b), args.transform)
    lines = [f"transform: {rep.transform}"]
    lines += [f"  h{pq}: {va} != {vb}" for pq, va, vb in rep.mismatches]
    lines.append("HOLDS" if rep.holds else "FAILS")
    _emit(args, "grids", "\n".join(lines), rep.to_json(), rep.holds)
    return 0 if rep.holds else 1


def cmd_catalog(args) -> int:
    action = args.action or "list"
    if action == "list":
        rows = [(k, catalog.catalog_entry(k).provenance) for k in catalog.builtin_keys()]
        probs = catalog.builtin_problem_keys()
        text = "\n".join([f"{k}" for k, _ in rows] + [f"{p} (problem)" for p in probs])
        _emit(args, "catalog", text, {"tables": [k for k, _ in rows], "problems": probs})
        return 0
    if not args.key:
        raise UsageError(f"catalog {action} needs a KEY")
    entry = catalog.catalog_entry(args.key)
    if action == "show":
        text = entry.table.describe() + "\nprovenance: " + entry.provenance
        _emit(args, "catalog", text, catalog.table_to_json(entry.table) | {"provenance": entry.provenance})
        return 0
    if action == "dump":
        if not args.path:
            raise UsageError("catalog dump needs a PATH")
        catalog.save_table(entry.table, args.path)
        _emit(args, "catalog", f"wrote {args.path}", {"key": args.key, "path": args.path})
        return 0
    raise UsageError(f"unknown catalog action {action!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="pwmirror", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="print the PW polynomial of a table")
    p.add_argument("--table", required=True, help="catalog key or table file")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("mirror", parents=[common], help="apply the mirror exponent transform")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--table")
    g.add_argument("--poly", help="polynomial in u, t, w, p")
    p.add_argument("--dim", type=int)
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("verify", parents=[common], help="check the mirror P=W identity")
    p.add_argument("--side-a", required=True)
    p.add_argument("--side-b", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("period", parents=[common], help="constant terms of powers")
    p.add_argument("--expr", required=True)
    p.add_argument("--vars", required=True, help="comma-separated variable names")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--prune", action="store_true", help="drop monomials that cannot return to 0")
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("les", parents=[common], help="solve a long exact sequence")
    p.add_argument("--problem", required=True, help="problem file or bundled problem key")
    p.set_defaults(func=cmd_les)

    p = sub.add_parser("diamond", parents=[common], help="f^{p,q} diamond of a threefold LG model")
    p.add_argument("--ky", type=int, required=True)
    p.add_argument("--ph", type=int, required=True)
    p.add_argument("--h12", type=int, default=0)
    p.add_argument("--h21", type=int, default=0)
    p.set_defaults(func=cmd_diamond)

    p = sub.add_parser("grids", parents=[common], help="compare Hodge grids under a reflection")
    p.add_argument("--a", required=True, help="table (key or file) or grid JSON file")
    p.add_argument("--b", required=True)
    p.add_argument("--transform", required=True, help="logCY(d) | fano(n) | boundary(n) | identity")
    p.set_defaults(func=cmd_grids)

    p = sub.add_parser("catalog", parents=[common], help="list, show or dump catalog tables")
    p.add_argument("action", nargs="?", choices=["list", "show", "dump"])
    p.add_argument("key", nargs="?")
    p.add_argument("path", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, OSError, InconsistentSequenceError, ZeroDivisionError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"pwmirror {args.command}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
