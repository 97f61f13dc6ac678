"""Command-line front end.

Exit status: 0 on success, 2 on usage or parse errors, 3 when an engine
fails.  ``detect --exit-code`` reports the verdict instead (1 found,
0 not found), and ``verify`` exits 1 when engines disagree.
"""

from __future__ import annotations

import argparse
import csv
import gc
import json
import statistics
import sys
import time
from typing import Optional

from .clique import reduce_to_clique
from .generate import random_graph
from .graph import GraphParseError, OrderedGraph, is_realization, parse_ordered_graph, render_ordered_graph
from .merge import build_bounded_tree, dump_tree
from .oracle import OracleCapError
from .pattern import Pattern, PatternParseError, named_pattern, p4_pattern, parse_pattern, pattern_display_name, render_pattern
from .report import EngineError
from .routing import ENGINES, detect

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_ENGINE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> OrderedGraph:
    try:
        return parse_ordered_graph(_read(path))
    except OSError as exc:
        raise _UsageError(f"cannot read graph: {exc}") from None
    except GraphParseError as exc:
        raise _UsageError(f"graph {path}: {exc}") from None


def _load_pattern(args) -> Pattern:
    sources = [args.pattern is not None, args.pattern_name is not None]
    if sum(sources) > 1:
        raise _UsageError("give either --pattern or --pattern-name, not both")
    if args.pattern is not None:
        try:
            return parse_pattern(_read(args.pattern))
        except OSError as exc:
            raise _UsageError(f"cannot read pattern: {exc}") from None
        except PatternParseError as exc:
            raise _UsageError(f"pattern {args.pattern}: {exc}") from None
    if args.pattern_name is not None:
        try:
            return named_pattern(args.pattern_name)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    if getattr(args, "p4_variant", None) is not None:
        try:
            return p4_pattern(args.p4_variant, args.mirrored)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    raise _UsageError("a pattern is required: --pattern, --pattern-name or --p4-variant")


def _pattern_label(P: Pattern) -> str:
    return pattern_display_name(P) or render_pattern(P).strip().replace("\n", " | ")


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, (time.perf_counter() - t) * 1000.0


# --- subcommands ---------------------------------------------------------------

def cmd_detect(args) -> int:
    G = _load_graph(args.graph)
    P = _load_pattern(args)
    if args.emit_reduction:
        with open(args.emit_reduction, "w", encoding="utf-8") as fh:
            fh.write(reduce_to_clique(G, P).render())
    if args.dump_tree:
        with open(args.dump_tree, "w", encoding="utf-8") as fh:
            fh.write(dump_tree(build_bounded_tree(P)) + "\n")
    p4v = args.p4_variant if args.pattern is not None or args.pattern_name is not None else None
    r, millis = _timed(lambda: detect(G, P, args.engine, p4_variant=p4v, mirrored=args.mirrored))
    if args.json:
        d = r.to_dict()
        d.update({"pattern": _pattern_label(P), "n": G.n, "m": G.m, "millis": round(millis, 3)})
        print(json.dumps(d, sort_keys=True))
    else:
        print(r.line())
    if args.exit_code:
        return EXIT_FOUND if r.found else EXIT_OK
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.graph is not None:
        G = _load_graph(args.graph)
    elif args.n is not None:
        m = args.m if args.m is not None else 0
        try:
            G = random_graph(args.n, m=m, seed=args.seed)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    else:
        raise _UsageError("verify needs --graph or --n (with --m and --seed)")
    P = _load_pattern(args)
    names = [e.strip() for e in args.engines.split(",") if e.strip()]
    for e in names:
        if e not in ENGINES:
            raise _UsageError(f"unknown engine {e!r}; use one of {', '.join(ENGINES)}")
    if "oracle" not in names:
        names.append("oracle")
    verdicts = {}
    for e in names:
        r = detect(G, P, e)
        if r.found and not is_realization(G, r.witness, P):
            print(f"{e}: invalid witness {r.witness}", file=sys.stderr)
            verdicts[e] = None
        else:
            verdicts[e] = r.found
        print(f"{e}: {r.line()}")
    if len(set(verdicts.values())) != 1:
        print("DISAGREE", file=sys.stderr)
        print(render_ordered_graph(G), end="", file=sys.stderr)
        print(render_pattern(P), end="", file=sys.stderr)
        return 1
    print("AGREE " + ("FOUND" if verdicts["oracle"] else "NOT-FOUND"))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.m is not None and args.density is not None:
        raise _UsageError("give either --m or --density")
    model = "gnp" if args.density is not None else args.model
    try:
        if model == "gnm":
            if args.m is None:
                raise ValueError("the gnm model needs --m")
            G = random_graph(args.n, m=args.m, seed=args.seed, model="gnm")
        else:
            if args.density is None:
                raise ValueError("the gnp model needs --density")
            G = random_graph(args.n, p=args.density, seed=args.seed, model="gnp")
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    text = render_ordered_graph(G)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def bench_rows(P: Pattern, sizes, engine: str = "auto", seed: int = 0, edge_factor: int = 5, repeats: int = 5):
    """``(n, m, millis)`` rows: median wall-clock of ``repeats`` detections on seeded G(n, edge_factor·n).

    As with :mod:`timeit`, garbage collection is paused while a run is timed.
    """
    rows = []
    for n in sizes:
        m = min(edge_factor * n, n * (n - 1) // 2)
        G = random_graph(n, m=m, seed=seed + n)
        times = []
        for _ in range(repeats):
            gc.collect()
            gc.disable()
            try:
                _, ms = _timed(lambda: detect(G, P, engine))
            finally:
                gc.enable()
            times.append(ms)
        rows.append((n, m, statistics.median(times)))
    return rows


def cmd_bench(args) -> int:
    P = _load_pattern(args)
    try:
        sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    except ValueError:
        raise _UsageError(f"--sizes must be comma-separated integers, got {args.sizes!r}") from None
    rows = bench_rows(P, sizes, args.engine, args.seed, args.edge_factor, args.repeats)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["n", "m", "millis"])
    for n, m, ms in rows:
        out.writerow([n, m, f"{ms:.3f}"])
    return EXIT_OK


# --- parser ----------------------------------------------------------------------

def _add_pattern_args(p, p4_flags: bool = True) -> None:
    p.add_argument("--pattern", metavar="PATH", help="pattern file")
    p.add_argument("--pattern-name", metavar="NAME", help="named pattern, e.g. chordal, p-a, p4-3, flat-cycle-5")
    if p4_flags:
        p.add_argument("--p4-variant", type=int, choices=range(1, 9), metavar="1..8", help="positive P4 ordering")
        p.add_argument("--mirrored", action="store_true", help="use the mirror image of the P4 ordering")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orderedpatterns", description="Detect patterns in vertex-ordered graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("detect", help="detect one pattern in one graph")
    d.add_argument("--graph", required=True, metavar="PATH", help="graph file, or - for stdin")
    _add_pattern_args(d)
    d.add_argument("--engine", choices=ENGINES, default="auto")
    d.add_argument("--json", action="store_true", help="print a JSON report")
    d.add_argument("--exit-code", action="store_true", help="exit 1 if found, 0 if not")
    d.add_argument("--emit-reduction", metavar="PATH", help="write the layered clique instance")
    d.add_argument("--dump-tree", metavar="PATH", help="write the merge tree built for the pattern")
    d.add_argument("--seed", type=int, default=0, help="accepted for symmetry; detection is deterministic")
    d.set_defaults(func=cmd_detect)

    v = sub.add_parser("verify", help="cross-check engines against the oracle")
    v.add_argument("--graph", metavar="PATH")
    v.add_argument("--n", type=int, help="generate a G(n, m) instance instead of reading one")
    v.add_argument("--m", type=int)
    v.add_argument("--seed", type=int, default=0)
    _add_pattern_args(v)
    v.add_argument("--engines", default="auto", help="comma-separated engine names")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="write a seeded random graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--density", type=float)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--model", choices=("gnm", "gnp"), default="gnm")
    g.add_argument("--out", metavar="PATH")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time detection on G(n, 5n) instances")
    _add_pattern_args(b)
    b.add_argument("--sizes", default="10000,100000", help="comma-separated n values")
    b.add_argument("--engine", choices=ENGINES, default="auto")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--edge-factor", type=int, default=5)
    b.add_argument("--repeats", type=int, default=5)
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EngineError, OracleCapError) as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
