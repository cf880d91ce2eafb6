"""Command line front end: ``spaltcalc {enumerate,diagram,cohomology,algebra,verify}``.

Exit status is 0 on success, 1 when a verification suite fails and 2 on bad
input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import render
from .arc_diagrams import (BLACK, GREEN, RED, DiagramError, circle_diagram,
                           cup_diagram, extended_cup_rowstrict,
                           extended_cup_standard)
from .checks import SUITES, run_suite
from .dependence_graphs import (dep_graph_pair, dep_graph_rowstrict,
                                dep_graph_standard, independents)
from .tableaux import (TableauError, TableauType, enumerate_row_strict,
                       enumerate_standard, parse_tableau, weight_sequence)
from .tqft_algebra import SizeError, algebra_table, f_of, max_dim


class UsageError(Exception):
    pass


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def resolve_type(args) -> TableauType:
    """Type from ``--n/--k/--type``; ``--type`` defaults to ``1,...,n``."""
    if args.type:
        try:
            dims = tuple(int(x) for x in args.type.split(",") if x.strip())
        except ValueError:
            raise UsageError(f"--type must be a comma list of integers: {args.type!r}")
        n = dims[-1] if dims else 0
        if args.n is not None and args.n != n:
            raise UsageError(f"--type {args.type} does not end with --n {args.n}")
    elif args.n is not None:
        n, dims = args.n, tuple(range(1, args.n + 1))
    else:
        raise UsageError("give --n or --type")
    return TableauType(n, args.k, dims)


def _tableau(text: str, args):
    ttype = resolve_type(args) if (args.type or args.n is not None) else None
    return parse_tableau(text, ttype)


def cmd_enumerate(args) -> str:
    t = resolve_type(args)
    ws = enumerate_standard(t) if args.standard else enumerate_row_strict(t)
    if args.format == "json":
        return _dump({"type": t.to_json(), "standard": args.standard, "count": len(ws),
                      "tableaux": [dict(w.to_json(), tableau=str(w),
                                        weights=weight_sequence(w)) for w in ws]})
    width = max([len(str(w)) for w in ws], default=0)
    lines = [f"{str(w).ljust(width)}  {weight_sequence(w)}" for w in ws]
    return "\n".join(lines + [f"count: {len(ws)}"]) + "\n"


def cmd_diagram(args) -> str:
    ws = [_tableau(s, args) for s in args.tableaux]
    fmt = args.format
    if len(ws) == 2:
        if args.kind == "graph":
            obj = dep_graph_pair(*ws)
            pics = (render.graph_ascii, render.graph_svg)
        else:
            obj = circle_diagram(*ws)
            pics = (render.circle_ascii, render.circle_svg)
    elif len(ws) == 1:
        w = ws[0]
        if args.standard and not w.is_standard:
            raise UsageError(f"{w} is not standard")
        if args.kind == "graph":
            obj = dep_graph_standard(w) if args.standard else dep_graph_rowstrict(w)
            pics = (render.graph_ascii, render.graph_svg)
        else:
            if args.kind == "cup":
                obj = cup_diagram(w)
            else:
                obj = extended_cup_standard(w) if args.standard else extended_cup_rowstrict(w)
            pics = (render.cup_ascii, render.cup_svg)
    else:
        raise UsageError("diagram takes one or two tableaux")
    if fmt == "json":
        return _dump(obj.to_json())
    return pics[0](obj) if fmt == "ascii" else pics[1](obj)


def _cohomology_row(w, w2) -> dict:
    c = circle_diagram(w, w2)
    space = f_of(c)
    return {"pair": [str(w), str(w2)], "black": c.count(BLACK), "green": c.count(GREEN),
            "red": c.count(RED), "dimension": space.dimension,
            "poincare": space.poincare_text(),
            "independents": len(independents(dep_graph_pair(w, w2)))}


def cmd_cohomology(args) -> str:
    if args.all:
        t = resolve_type(args)
        ws = enumerate_row_strict(t)
        rows = [_cohomology_row(w, w2) for w in ws for w2 in ws]
    elif len(args.tableaux) == 2:
        w, w2 = (_tableau(s, args) for s in args.tableaux)
        if w.ttype != w2.ttype:
            raise UsageError(f"{w} and {w2} have different types")
        rows = [_cohomology_row(w, w2)]
    else:
        raise UsageError("cohomology takes two tableaux or --all")
    if args.format == "json":
        return _dump(rows)
    if args.format == "svg":
        raise UsageError("cohomology has no svg output")
    out = []
    for r in rows:
        poly = "empty intersection" if r["red"] else r["poincare"]
        out.append(f"{r['pair'][0]} {r['pair'][1]}  black={r['black']} green={r['green']} "
                   f"red={r['red']}  dim={r['dimension']}  {poly}")
    return "\n".join(out) + "\n"


def cmd_algebra(args) -> str:
    t = resolve_type(args)
    try:
        table = algebra_table(t, max_dim())
    except SizeError as exc:
        raise UsageError(f"{exc}; raise CALC_MAX_DIM to allow it")
    if args.format == "json":
        return _dump(table.to_json())
    if args.format == "svg":
        raise UsageError("algebra has no svg output")
    idx = table.index()
    lines = [f"dimension {len(table.basis)}"]
    for i, b in enumerate(table.basis):
        lines.append(f"b{i}: {b.w} {b.w2} [{','.join(b.assignment)}]")
    for (i, j), res in sorted(table.products.items()):
        terms = " + ".join(f"{c}*b{idx[e]}" if c != 1 else f"b{idx[e]}"
                           for e, c in sorted(res.items(), key=lambda kv: idx[kv[0]]))
        lines.append(f"b{i}*b{j} = {terms or '0'}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(name, args.max_n) for name in names]
    code = 0 if all(r.passed for r in results) else 1
    if args.format == "json":
        return _dump([r.to_json() for r in results]), code
    lines = []
    for r in results:
        lines.append(f"{r.name}: {'pass' if r.passed else 'FAIL'} ({r.checked} checks, "
                     f"{len(r.failures)} failures)")
        if r.failures:
            lines.append("first counterexample: " + json.dumps(r.failures[0], sort_keys=True))
    return "\n".join(lines) + "\n", code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of boxes")
    common.add_argument("--k", type=int, default=0, help="length of the bottom row (default 0)")
    common.add_argument("--type", help="comma list i_1,...,i_m ending in n (default 1,...,n)")
    common.add_argument("--format", choices=("json", "ascii", "svg"), default="ascii")
    common.add_argument("--out", help="write the output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="spaltcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list row strict or standard tableaux")
    p.add_argument("--standard", action="store_true", help="only standard tableaux")

    p = sub.add_parser("diagram", parents=[common],
                       help="draw a cup diagram (one tableau) or a circle diagram (two)")
    p.add_argument("tableaux", nargs="+", help='tableaux written "top/bottom", e.g. 6543/731')
    p.add_argument("--kind", choices=("extended", "cup", "graph"), default="extended")
    p.add_argument("--standard", action="store_true",
                   help="use the construction for standard tableaux")

    p = sub.add_parser("cohomology", parents=[common],
                       help="circle counts, dimension and Poincare polynomial of a pair")
    p.add_argument("tableaux", nargs="*")
    p.add_argument("--all", action="store_true", help="every pair of the given type")

    sub.add_parser("algebra", parents=[common], help="structure constants of the algebra")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-n", type=int, dest="max_n", help="largest n to check")
    return parser


COMMANDS = {"enumerate": cmd_enumerate, "diagram": cmd_diagram, "cohomology": cmd_cohomology,
            "algebra": cmd_algebra, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = COMMANDS[args.command](args)
    except (UsageError, TableauError, DiagramError) as exc:
        print(f"spaltcalc: error: {exc}", file=sys.stderr)
        return 2
    text, code = result if isinstance(result, tuple) else (result, 0)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
