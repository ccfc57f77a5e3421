"""Command-line entry point ``sek``.

Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.
Text output is terse; ``--format json`` gives documents carrying a
``schema_version`` field.  ``classify`` and ``discharge`` always emit JSON.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, TextIO

from . import certify as cert
from .coloring import dsatur_color, dump_coloring, greedy_color, load_coloring, verify
from .density import format_rational, mad_exact, parse_rational
from .discharging import audit_final_charges, discharge
from .errors import SekError
from .exact import DEFAULT_BUDGET, exact_chi_s
from .generators import FAMILIES, GraphFamilySpec, generate
from .graph import Graph, conflict_graph, degeneracy, dump_graph, has_three_regular_subgraph, load_graph
from .mad83 import color_mad83
from .structure import CONTEXTS, classify
from .two_degenerate import color_two_degenerate

SCHEMA_VERSION = 1
RANDOM_FAMILIES = ("random2deg", "randomMadBounded")


class UsageError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_graph(fh)


def _emit(args, text: str | None, doc: dict[str, Any] | None, out: TextIO) -> None:
    if args.format == "json" and doc is not None:
        payload = json.dumps({"schema_version": SCHEMA_VERSION, **doc}, indent=2, sort_keys=False) + "\n"
    else:
        payload = text if text.endswith("\n") else text + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        out.write(payload)


def _rational(s: str) -> Fraction:
    try:
        return parse_rational(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {s!r}") from exc


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


# ---------------------------------------------------------------------------
# subcommands; each returns an exit code

def cmd_mad(args, out):
    res = mad_exact(_read_graph(args.graph))
    _emit(args, f"mad {format_rational(res.mad)}",
          {"mad": format_rational(res.mad), "witness": list(res.witness)}, out)
    return 0


def cmd_degeneracy(args, out):
    k, order = degeneracy(_read_graph(args.graph))
    _emit(args, f"degeneracy {k}\norder {' '.join(map(str, order))}", {"degeneracy": k, "order": order}, out)
    return 0


def cmd_conflict(args, out):
    cg, table = conflict_graph(_read_graph(args.graph))
    text = dump_graph(cg, [f"vertex {i} = edge {u} {v}" for i, (u, v) in enumerate(table)])
    _emit(args, text, {"n": cg.n, "edges": [list(e) for e in cg.edges], "table": [list(e) for e in table]}, out)
    return 0


def cmd_three_regular(args, out):
    found, witness = has_three_regular_subgraph(_read_graph(args.graph), budget=args.budget)
    edges = sorted(witness) if found else []
    text = "three-regular yes\n" + "".join(f"{u} {v}\n" for u, v in edges) if found else "three-regular no"
    _emit(args, text, {"found": found, "witness": [list(e) for e in edges]}, out)
    return 0


def cmd_classify(args, out):
    rep = classify(_read_graph(args.graph), args.context, args.delta)
    args.format = "json"
    _emit(args, None, rep.to_dict(), out)
    return 0


def cmd_discharge(args, out):
    ledger = discharge(_read_graph(args.graph), args.context, args.delta)
    bad = audit_final_charges(ledger)
    doc = ledger.to_dict()
    doc["deficient"] = [{"vertex": d.vertex, "charge": format_rational(d.charge)} for d in bad]
    args.format = "json"
    _emit(args, None, doc, out)
    return 0


def cmd_color(args, out):
    g = _read_graph(args.graph)
    if args.method == "greedy":
        f = greedy_color(g)
    elif args.method == "dsatur":
        f = dsatur_color(g)
    elif args.method == "two-degenerate":
        f, _ = color_two_degenerate(g, args.d)
    else:
        f, _ = color_mad83(g, args.delta)
    text = dump_coloring(f, [f"method {args.method}", f"colors {f.num_colors()}"])
    doc = {"method": args.method, "colors": f.num_colors(),
           "assignments": [[u, v, c] for (u, v), c in sorted(f.assignments.items())]}
    _emit(args, text, doc, out)
    return 0


def cmd_exact(args, out):
    res = exact_chi_s(_read_graph(args.graph), budget=args.budget)
    doc = {"chi_s": res.chi if res.exact else None, "exact": res.exact, "lower": res.lower,
           "upper": res.upper, "nodes": res.nodes}
    if res.exact:
        _emit(args, f"chi_s {res.chi}", doc, out)
        return 0
    _emit(args, f"chi_s between {res.lower} {res.upper}", doc, out)
    print(f"sek: node budget {args.budget} exhausted", file=sys.stderr)
    return 1


def cmd_verify(args, out):
    g = _read_graph(args.graph)
    with open(args.coloring, encoding="utf-8") as fh:
        f = load_coloring(fh)
    bad = verify(g, f, args.k)
    missing = sorted(set(g.edges) - set(f.assignments))
    if not args.partial:
        bad_lines = [f"uncolored {u} {v}" for u, v in missing]
    else:
        bad_lines = []
    for x in bad:
        if x.kind == "range":
            bad_lines.append(f"range {x.edge[0]} {x.edge[1]} color {x.color}")
        else:
            bad_lines.append(f"conflict {x.edge[0]} {x.edge[1]} with {x.other[0]} {x.other[1]} color {x.color}")
    ok = not bad_lines
    _emit(args, "ok" if ok else "\n".join(bad_lines), {"ok": ok, "problems": bad_lines}, out)
    return 0 if ok else 1


def _family_spec(args) -> GraphFamilySpec:
    if args.family in RANDOM_FAMILIES and args.seed is None:
        raise UsageError(f"family {args.family} is random and requires --seed")
    return GraphFamilySpec(args.family, delta=args.delta, t=args.t, n=args.n, mad_bound=args.mad_bound,
                           seed=args.seed, retry_cap=args.retry_cap)


def cmd_generate(args, out):
    spec = _family_spec(args)
    g = generate(spec)
    _emit(args, dump_graph(g, [spec.label()]), {"family": spec.family, "label": spec.label(), "n": g.n,
                                                 "edges": [list(e) for e in g.edges]}, out)
    return 0


def cmd_certify(args, out):
    spec = _family_spec(args)
    stream = cert.family_stream(spec, args.count, args.seed if spec.family in RANDOM_FAMILIES else None)
    workers = args.workers or int(os.environ.get("SEK_WORKERS", "1") or 1)
    rep = cert.certify_bound(stream, args.bound, args.method, budget=args.budget, workers=max(1, workers))
    doc = {"bound": rep.bound, "method": rep.method, "passed": rep.passed,
           "records": [{"instance_id": r.instance_id, "n": r.n, "m": r.m, "delta": r.delta,
                        "mad": format_rational(r.mad), "colors": r.colors, "bound": r.bound,
                        "status": r.status, "hypothesis": r.hypothesis} for r in rep.records]}
    _emit(args, rep.to_tsv(), doc, out)
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sek", description="Strong edge-coloring toolkit for sparse graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("graph", help="edge-list file")
        sp.set_defaults(func=fn)
        return sp

    graph_cmd("mad", cmd_mad, "exact maximum average degree")
    graph_cmd("degeneracy", cmd_degeneracy, "degeneracy and an elimination order")
    graph_cmd("conflict", cmd_conflict, "conflict graph of the edges")
    sp = graph_cmd("three-regular", cmd_three_regular, "search for a 3-regular subgraph")
    sp.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    for name, fn in (("classify", cmd_classify), ("discharge", cmd_discharge)):
        sp = graph_cmd(name, fn, f"{name} core vertices")
        sp.add_argument("--context", choices=CONTEXTS, required=True)
        sp.add_argument("--delta", type=int, required=True)
    sp = graph_cmd("color", cmd_color, "strong edge-coloring")
    sp.add_argument("--method", choices=("greedy", "dsatur", "two-degenerate", "mad83"), default="dsatur")
    sp.add_argument("--d", type=int, help="D for two-degenerate (default max(2, max degree))")
    sp.add_argument("--delta", type=int, help="Delta for mad83 (default max(9, max degree))")
    sp = graph_cmd("exact", cmd_exact, "exact strong chromatic index")
    sp.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    sp = graph_cmd("verify", cmd_verify, "check a coloring file")
    sp.add_argument("coloring")
    sp.add_argument("--k", type=int, help="palette size")
    sp.add_argument("--partial", action="store_true", help="accept uncolored edges")

    def family_args(sp):
        sp.add_argument("--delta", type=int)
        sp.add_argument("--t", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--mad-bound", dest="mad_bound", type=_rational)
        sp.add_argument("--seed", type=int)
        sp.add_argument("--retry-cap", dest="retry_cap", type=_positive, default=1000)

    sp = sub.add_parser("generate", parents=[common], help="generate a graph family member")
    sp.add_argument("family", choices=FAMILIES)
    family_args(sp)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("certify", parents=[common], help="check a color bound over a family")
    sp.add_argument("--family", choices=FAMILIES, required=True)
    family_args(sp)
    sp.add_argument("--bound", choices=cert.BOUNDS, required=True)
    sp.add_argument("--method", choices=cert.METHODS, required=True)
    sp.add_argument("--count", type=_positive, default=1)
    sp.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    sp.add_argument("--workers", type=_positive, help="process count (env SEK_WORKERS)")
    sp.set_defaults(func=cmd_certify)
    return p


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"sek: {exc}", file=err)
        return 2
    except (SekError, OSError, ValueError) as exc:
        print(f"sek: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
