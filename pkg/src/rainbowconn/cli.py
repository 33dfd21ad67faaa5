"""Command line: ``rainbowconn {rc,verify,construct,tnd,bounds}``.

Exit codes: 0 success, 1 negative verification, 2 input error, 3 search
budget exhausted. ``RAINBOW_BUDGET`` and ``RAINBOW_WORKERS`` supply defaults;
explicit flags win over the environment.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .bounds import BoundRangeError, bound_report, eval_prop3_upper
from .constructions import NAMED_KINDS, build_gdn, build_named
from .extremal import ExtremalSearchError, compute_tnd, default_workers, tnd_table
from .graph_core import GraphError, bridges, diameter, format_edge_list, graph6_encode, read_graph
from .rainbow_verify import ColoringError, format_coloring, is_rainbow_connected, parse_coloring
from .rc_solver import SearchBudgetExceeded, default_budget, rc_exact

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load_graph(arg: str):
    p = Path(arg)
    try:
        text = p.read_text() if p.exists() else arg
        return read_graph(text)
    except (GraphError, ValueError) as exc:
        raise InputError(f"cannot parse graph {arg!r}: {exc}") from None


def _parse_range(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..")
            return range(int(a), int(b) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise InputError(f"bad range {text!r}; use A..B") from None


def cmd_rc(args, out) -> int:
    g = _load_graph(args.graph)
    if not g.is_connected():
        raise InputError("graph is disconnected; rc is undefined")
    budget = args.budget or default_budget()
    res = rc_exact(g, k_max=args.kmax, budget=budget)
    diam = diameter(g)
    nbr = len(bridges(g))
    print(f"rc={res.rc}", file=out)
    print(f"lower_bound diameter={diam} bridges={nbr} max={max(diam, nbr)}", file=out)
    print(f"search nodes={res.stats.nodes} colorings_tested={res.stats.colorings_tested}", file=out)
    print(format_coloring(g, res.witness), end="", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = _load_graph(args.graph)
    try:
        col = parse_coloring(Path(args.coloring).read_text(), g)
    except (ColoringError, OSError) as exc:
        raise InputError(f"cannot parse colouring: {exc}") from None
    if not g.is_connected():
        raise InputError("graph is disconnected")
    res = is_rainbow_connected(g, col)
    if res.ok:
        print(f"VALID paths={len(res.certificate)} colors_used={col.colors_used()}", file=out)
        return EXIT_OK
    s, t = res.failing_pair
    print(f"INVALID pair=({s},{t})", file=out)
    return EXIT_INVALID


def cmd_construct(args, out) -> int:
    try:
        if args.kind == "gdn":
            if args.d is None:
                raise InputError("--d is required for gdn")
            g, col, plan = build_gdn(args.n, args.d)
        else:
            g, col = build_named(args.kind, args.n)
            plan = None
    except GraphError as exc:
        raise InputError(str(exc)) from None
    prefix = Path(args.out_prefix) if args.out_prefix else None
    if prefix:
        prefix.with_suffix(".g6").write_text(graph6_encode(g) + "\n")
        prefix.with_suffix(".col").write_text(format_coloring(g, col))
        prefix.with_suffix(".edges").write_text(format_edge_list(g))
    line = f"kind={args.kind} n={g.n} edges={g.m} colors={col.colors_used()}"
    if plan is not None:
        formula = eval_prop3_upper(args.n, args.d)
        line += (f" formula={formula} {'match' if formula == g.m else 'MISMATCH'}"
                 f" q={plan.q} pendants={plan.pendant_count}")
    print(line, file=out)
    print(graph6_encode(g), file=out)
    return EXIT_OK


_TABLE_FIELDS = ["n", "d", "t", "lower", "upper", "exact", "gap_lower", "gap_upper", "sandwich", "error"]


def _cell_row(c) -> dict:
    gl, gu = c.gaps()
    return {"n": c.n, "d": c.d, "t": c.t, "lower": c.lower, "upper": c.upper, "exact": c.exact,
            "gap_lower": gl, "gap_upper": gu, "sandwich": c.sandwich, "error": c.error}


def _fmt(v) -> str:
    return "" if v is None else str(v)


def cmd_tnd(args, out) -> int:
    workers = args.workers or default_workers()
    budget = args.budget or default_budget()
    if args.n is None and not args.n_range:
        raise InputError("give --n or --n-range")
    n_range = _parse_range(args.n_range) if args.n_range else range(args.n, args.n + 1)
    if args.d_range:
        d_range = _parse_range(args.d_range)
    elif args.d is not None:
        d_range = range(args.d, args.d + 1)
    else:
        d_range = None
    single = args.n is not None and args.d is not None and not args.n_range and not args.d_range
    if single and args.format == "json":
        try:
            res = compute_tnd(args.n, args.d, source=args.graph6, workers=workers, budget=budget,
                              checkpoint=args.checkpoint)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        rec = res.to_record()
        rep = bound_report(args.n, args.d)
        rec["bounds"] = [{"name": e.name, "value": e.value, "direction": e.direction, "status": e.status}
                         for e in rep.entries if e.status != "out-of-range"]
        json.dump(rec, out, sort_keys=True, indent=2)
        out.write("\n")
        return EXIT_OK
    cells = tnd_table(n_range, d_range, source=args.graph6, workers=workers, budget=budget)
    if any(c.error and "budget" in c.error for c in cells) and all(c.t is None for c in cells):
        _render_cells(cells, args.format, out)
        return EXIT_BUDGET
    _render_cells(cells, args.format, out)
    return EXIT_OK


def _render_cells(cells, fmt: str, out):
    rows = [_cell_row(c) for c in cells]
    if fmt == "json":
        payload = {"schema": 1, "cells": [dict(r, record=c.record) for r, c in zip(rows, cells)]}
        json.dump(payload, out, sort_keys=True, indent=2)
        out.write("\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=_TABLE_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _fmt(v) for k, v in r.items()})
        out.write(buf.getvalue())
    else:
        out.write("| " + " | ".join(_TABLE_FIELDS) + " |\n")
        out.write("|" + "---|" * len(_TABLE_FIELDS) + "\n")
        for r in rows:
            out.write("| " + " | ".join(_fmt(r[k]) for k in _TABLE_FIELDS) + " |\n")


def cmd_bounds(args, out) -> int:
    try:
        rep = bound_report(args.n, args.d)
    except BoundRangeError as exc:
        raise InputError(str(exc)) from None
    print(f"n={rep.n} d={rep.d}", file=out)
    for e in rep.entries:
        if e.status == "out-of-range":
            continue
        val = f"{e.value:.3f}" if isinstance(e.value, float) and not float(e.value).is_integer() else f"{int(e.value)}"
        print(f"{e.name:<10} {e.direction:<6} {val:>12} {e.status}", file=out)
    print(f"combined lower={rep.lower()} upper={_fmt(rep.upper())}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rainbowconn", description="Rainbow connection toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("rc", help="exact rainbow connection number")
    s.add_argument("graph", help="graph6 string, or a file holding graph6 or an edge list")
    s.add_argument("--kmax", type=int, default=None)
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_rc)

    s = sub.add_parser("verify", help="check a colouring for rainbow connectivity")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", help="build G_d(n) or a named graph with its colouring")
    s.add_argument("--kind", choices=("gdn",) + NAMED_KINDS, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, default=None)
    s.add_argument("--out-prefix", default=None)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("tnd", help="exact t(n,d) by exhaustive search")
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--d", type=int, default=None)
    s.add_argument("--n-range", default=None, help="A..B")
    s.add_argument("--d-range", default=None, help="A..B")
    s.add_argument("--graph6", default=None, help="graph6 file to use instead of the generator")
    s.add_argument("--format", choices=("csv", "md", "json"), default="md")
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--checkpoint", default=None, help="resumable batch log (single cell only)")
    s.set_defaults(func=cmd_tnd)

    s = sub.add_parser("bounds", help="closed-form bounds on t(n,d)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_bounds)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    for flag in ("budget", "workers"):
        val = getattr(args, flag, None)
        if val is not None and val <= 0:
            print(f"error: --{flag} must be positive", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ExtremalSearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET if "budget" in str(exc) else EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
