"""Command-line interface: color, verify, chi, gen and sweep subcommands."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from .construct import color_corona
from .enumeration import enumerate_subcubic
from .errors import (
    BudgetExceededError,
    CoronaColorError,
    FallbackBudgetError,
    NotSubcubicError,
)
from .graph import Graph, gen_random_subcubic, max_degree
from .graphio import (
    coloring_document,
    document_coloring,
    emit_coloring_json,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    parse_coloring_json,
    parse_edge_list,
    parse_graph6,
)
from .search import DEFAULT_BUDGET, chi_prod_exact, npdtc_search
from .verify import report_to_json, verify_npd, verify_nvd


def _read_graph(path: str, fmt: str) -> Graph:
    text = Path(path).read_text(encoding="utf-8")
    if fmt == "graph6":
        for line in text.splitlines():
            if line.strip():
                return parse_graph6(line)
        return parse_graph6(text)
    return parse_edge_list(text)


def _emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(g) + "\n"
    return emit_edge_list(g)


def cmd_color(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.g, args.format)
        h = _read_graph(args.h, args.format)
    except (CoronaColorError, OSError, ValueError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    try:
        result = color_corona(g, h, normalize=not args.no_normalize)
    except NotSubcubicError as exc:
        print(f"not subcubic: {exc}", file=sys.stderr)
        return 3
    except FallbackBudgetError as exc:
        print(f"fallback budget exceeded: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"bad instance: {exc}", file=sys.stderr)
        return 2
    doc = coloring_document(result.graph, result.coloring, result.corona_map)
    if args.out:
        Path(args.out).write_text(emit_coloring_json(doc), encoding="utf-8")
    if args.dot:
        Path(args.dot).write_text(
            emit_dot(result.graph, result.coloring, result.corona_map), encoding="utf-8"
        )
    print(
        f"case={result.trace.case_tag} "
        f"max_color={result.coloring.max_color} bound={result.trace.palette_bound}"
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.graph, args.format)
        doc = parse_coloring_json(Path(args.coloring).read_text(encoding="utf-8"))
    except (CoronaColorError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    if doc.n != g.n or doc.edges != g.edges:
        print("parse error: coloring document does not describe the given graph", file=sys.stderr)
        return 2
    coloring = document_coloring(doc)
    report = verify_npd(g, coloring) if args.mode == "product" else verify_nvd(g, coloring)
    print(report_to_json(report))
    return 0 if report.ok else 1


def cmd_chi(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.graph, args.format)
    except (CoronaColorError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    try:
        value = chi_prod_exact(g, args.budget)
        witness = npdtc_search(g, value, args.budget)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 5
    except ValueError as exc:
        print(f"bad instance: {exc}", file=sys.stderr)
        return 2
    print(value)
    if witness is None:
        print("internal error: witness search failed at the computed value", file=sys.stderr)
        return 5
    text = emit_coloring_json(coloring_document(g, witness))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        g = gen_random_subcubic(args.n, args.seed)
    except ValueError as exc:
        print(f"bad instance: {exc}", file=sys.stderr)
        return 2
    text = _emit_graph(g, args.format)
    try:
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"write error: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.count:
        rng = random.Random(args.seed)
        pairs = []
        for _ in range(args.count):
            ng = rng.randint(1, args.ng_max)
            nh = rng.randint(1, args.nh_max)
            pairs.append(
                (
                    gen_random_subcubic(ng, rng.randrange(1 << 30)),
                    gen_random_subcubic(nh, rng.randrange(1 << 30)),
                )
            )
    else:
        gs = [g for nn in range(1, args.ng_max + 1) for g in enumerate_subcubic(nn, connected=True)]
        hs = [h for nn in range(1, args.nh_max + 1) for h in enumerate_subcubic(nn)]
        pairs = [(g, h) for g in gs for h in hs]
    records = []
    for gg, hh in pairs:
        g6g, g6h = emit_graph6(gg), emit_graph6(hh)
        start = time.perf_counter()
        try:
            result = color_corona(gg, hh)
            bound = result.trace.palette_bound
            if result.coloring.max_color > bound:
                raise AssertionError(f"{result.coloring.max_color} colors exceed bound {bound}")
            chi = None
            if args.oracle_max and gg.n <= args.oracle_max and hh.n <= args.oracle_max:
                chi = chi_prod_exact(result.graph)
                if chi > bound:
                    raise AssertionError(f"exact index {chi} exceeds bound {bound}")
        except Exception as exc:  # any failure here falsifies the bound or flags a bug
            print(f"counterexample: g={g6g} h={g6h}: {exc}", file=sys.stderr)
            return 1
        wall_ms = (time.perf_counter() - start) * 1000.0
        records.append(
            {
                "g6_g": g6g,
                "g6_h": g6h,
                "n_g": gg.n,
                "n_h": hh.n,
                "delta_g": max_degree(gg),
                "delta_h": max_degree(hh),
                "case": result.trace.case_tag,
                "max_color": result.coloring.max_color,
                "bound": bound,
                "verified": True,
                "chi_prod": chi,
                "wall_ms": round(wall_ms, 3),
            }
        )
    lines = "".join(json.dumps(r) + "\n" for r in records)
    if args.log:
        with open(args.log, "a", encoding="utf-8") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="coronacolor",
        description=(
            "Total colorings of corona products of subcubic graphs with "
            "distinct neighbor color products, within max_degree+3 colors."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("color", help="color the corona product of two subcubic graphs")
    c.add_argument("--g", required=True, help="file with the first factor")
    c.add_argument("--h", required=True, help="file with the second factor")
    c.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    c.add_argument("--out", help="write the coloring document (JSON) here")
    c.add_argument("--dot", help="write a DOT rendering here")
    c.add_argument(
        "--no-normalize",
        action="store_true",
        help="keep the raw edge coloring instead of steering color 4 off the minimum vertex",
    )
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring document against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--coloring", required=True)
    v.add_argument("--mode", choices=("product", "set"), default="product")
    v.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("chi", help="exact distinguishing total chromatic number")
    x.add_argument("--graph", required=True)
    x.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    x.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    x.add_argument("--out", help="write the witness coloring document here")
    x.set_defaults(func=cmd_chi)

    g = sub.add_parser("gen", help="deterministic random subcubic graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("sweep", help="color and verify many pairs, logging JSON lines")
    s.add_argument("--ng-max", type=int, required=True)
    s.add_argument("--nh-max", type=int, required=True)
    s.add_argument("--count", type=int, default=0, help="random pairs; 0 sweeps exhaustively")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--oracle-max", type=int, default=0, help="cross-check pairs up to this size")
    s.add_argument("--log", help="append JSON lines here instead of stdout")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
