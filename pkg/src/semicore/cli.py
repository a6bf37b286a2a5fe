"""Command-line front end.

Randomized commands take --seed, fall back to the SEMICORE_SEED
environment variable, then to DEFAULT_SEED, so every run is repeatable.
Rationals print as p/q, reals with 9 significant digits, and timing goes
to stderr so identical commands produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import dense
from ._dispatch import backend
from .digraph import (
    DiGraph,
    gen_complete_bidirected,
    gen_random_min_outdegree,
    gen_transitive_tournament,
    induced_subgraph,
    parse_digraph,
    serialize_digraph,
)
from .errors import SemicoreError, TooLarge
from .extremal import extremal_tournament, sharpness_cap
from .peel import (
    guarantee_holds,
    peel_semidegree,
    semidegree_core,
    semidegree_guarantee,
    trace_csv,
)
from .verify import DEFAULT_SEED, scaled_battery


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _real(x: float) -> str:
    return f"{x:.9g}"


def _default_seed() -> int:
    env = os.environ.get("SEMICORE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SemicoreError(f"SEMICORE_SEED must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _load_graph(args) -> tuple[DiGraph, str]:
    """Graph plus a stable description line from either an input path or
    --random n d [seed]."""
    if getattr(args, "random", None) is not None:
        spec = args.random
        if len(spec) not in (2, 3):
            raise SemicoreError("--random takes N D and an optional SEED")
        n, d = spec[0], spec[1]
        seed = spec[2] if len(spec) == 3 else _default_seed()
        g = gen_random_min_outdegree(n, d, seed)
        return g, f"random(n={n}, d={d}, seed={seed})"
    if getattr(args, "input", None):
        g = parse_digraph(Path(args.input).read_text())
        return g, args.input
    raise SemicoreError("need an input file or --random N D [SEED]")


def _graph_summary(g: DiGraph, desc: str) -> list[str]:
    return [
        f"input: {desc}",
        f"n: {g.n}",
        f"m: {g.m}",
        f"min_outdegree: {g.min_out_degree()}",
        f"min_indegree: {g.min_in_degree()}",
    ]


def cmd_peel(args) -> int:
    g, desc = _load_graph(args)
    trace = peel_semidegree(g)
    d = args.d if args.d is not None else g.min_out_degree()
    if d > g.min_out_degree():
        raise SemicoreError(
            f"d={d} exceeds the graph's minimum outdegree {g.min_out_degree()}"
        )
    bound = semidegree_guarantee(g.n, d)
    holds = guarantee_holds(g.n, d, trace.best_value)
    lines = ["command: peel"]
    lines += _graph_summary(g, desc)
    lines += [
        f"max_min_semidegree: {trace.best_value}",
        f"witness_size: {trace.best_index}",
        f"d: {d}",
        f"bound: {_frac(bound)}",
        f"VERDICT: {'BOUND-HOLDS' if holds else 'BOUND-VIOLATED'}",
    ]
    print("\n".join(lines))
    if args.trace:
        Path(args.trace).write_text(trace_csv(trace))
    return 0 if holds else 1


def cmd_core(args) -> int:
    g, desc = _load_graph(args)
    core = semidegree_core(g, args.k)
    members = sorted(core)
    lines = ["command: core"]
    lines += _graph_summary(g, desc)
    lines += [
        f"k: {args.k}",
        f"core_size: {len(members)}",
        f"core: {' '.join(map(str, members)) if members else '(empty)'}",
    ]
    if args.out:
        if members:
            sub, labels = induced_subgraph(g, members)
            text = "# induced core subgraph\n# original-labels: " + " ".join(
                map(str, labels)
            ) + "\n" + serialize_digraph(sub)
            Path(args.out).write_text(text)
            lines.append(f"out: {args.out}")
        else:
            lines.append("out: (skipped, empty core)")
    print("\n".join(lines))
    return 0


def cmd_construct(args) -> int:
    g, params, parts = extremal_tournament(
        args.k, args.ell, args.n, b_order_seed=args.b_order_seed
    )
    ell, cap = sharpness_cap(params)
    Path(args.out).write_text(serialize_digraph(g))

    def span(r: range) -> str:
        return f"{r.start}..{r.stop - 1}" if len(r) else "(empty)"

    lines = [
        "command: construct",
        f"k: {params.k}",
        f"ell: {params.ell}",
        f"n: {params.n}",
        f"d: {params.d}",
        f"n0: {params.n0}",
        f"a_range: {span(parts.a)}",
        f"b_range: {span(parts.b)}",
        f"c_range: {span(parts.c)}",
        f"p_range: {span(parts.padding)}",
        f"ell_cap: {_frac(cap)}",
        f"arcs: {g.m}",
        f"out: {args.out}",
    ]
    print("\n".join(lines))
    return 0


def cmd_gen(args) -> int:
    if args.kind == "random":
        seed = args.seed if args.seed is not None else _default_seed()
        g = gen_random_min_outdegree(args.n, args.d, seed)
        header = f"# random(n={args.n}, d={args.d}, seed={seed})"
    elif args.kind == "transitive":
        g = gen_transitive_tournament(args.n)
        header = f"# transitive tournament n={args.n}"
    else:
        g = gen_complete_bidirected(args.n)
        header = f"# complete bidirected n={args.n}"
    text = header + "\n" + serialize_digraph(g)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote: {args.out} (n={g.n}, m={g.m})")
    else:
        sys.stdout.write(text)
    return 0


def cmd_dense_peel(args) -> int:
    g, desc = _load_graph(args)
    alpha = args.alpha  # None means measure from the graph
    rep = dense.dense_peel(g, alpha=alpha, oriented=args.oriented)
    lines = [
        "command: dense-peel",
        f"input: {desc}",
        f"mode: {'oriented' if args.oriented else 'digraph'}",
        format_report_block(rep),
    ]
    print("\n".join(lines))
    if args.survivor:
        if rep.survivor:
            sub, labels = induced_subgraph(g, rep.survivor)
            text = "# induced survivor subgraph\n# original-labels: " + " ".join(
                map(str, labels)
            ) + "\n" + serialize_digraph(sub)
            Path(args.survivor).write_text(text)
        else:
            Path(args.survivor).write_text("# empty survivor\n1 0\n")
    return 0


def format_report_block(rep: dense.DensePeelReport) -> str:
    return dense.format_report(rep).rstrip("\n")


def cmd_sweep(args) -> int:
    if args.step <= 0:
        raise SemicoreError("--step must be positive")
    if args.to < getattr(args, "from"):
        raise SemicoreError("--to must be at least --from")
    start = getattr(args, "from")
    count = int((args.to - start) / args.step + 1e-9) + 1
    grid = [start + i * args.step for i in range(count)]
    rows = dense.sweep(grid, mode=args.mode)
    print("alpha,half_alpha_sq,beta_branch,envelope,ceiling")
    for row in rows:
        print(",".join(_real(x) for x in row))
    monotone = dense.envelope_is_monotone(rows)
    print(f"envelope monotone: {'yes' if monotone else 'NO'}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    if args.max_n > 20:
        raise TooLarge(f"--max-n {args.max_n} exceeds the exhaustive oracle limit 20")
    if args.max_n < 1 or args.samples < 1:
        raise SemicoreError("--max-n and --samples must be positive")
    seed = args.seed if args.seed is not None else _default_seed()
    results = scaled_battery(args.max_n, args.samples, seed)
    for res in results:
        print(res.line())
    ok = all(r.ok for r in results)
    print(f"verify: {'all checks passed' if ok else 'FAILURES PRESENT'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semicore",
        description="Peel digraphs for dense subgraphs, build extremal "
        "tournaments, and check the guarantees exactly.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s 0.1.0 ({backend()} kernels)"
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("peel", help="greedy peel; report c and the d(d+1)/(2n) bound")
    p.add_argument("input", nargs="?", help="edge-list file")
    p.add_argument("--random", type=int, nargs="+", metavar="X",
                   help="generate input: N D [SEED]")
    p.add_argument("--d", type=int, default=None,
                   help="outdegree bound to check (default: measured minimum)")
    p.add_argument("--trace", help="write the per-step removal CSV here")
    p.set_defaults(fn=cmd_peel)

    p = sub.add_parser("core", help="maximal subgraph with all semidegrees >= k")
    p.add_argument("input", nargs="?")
    p.add_argument("--random", type=int, nargs="+", metavar="X")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--out", help="write the induced core subgraph here")
    p.set_defaults(fn=cmd_core)

    p = sub.add_parser("construct", help="extremal tournament with parts A/B/C")
    p.add_argument("k", type=int)
    p.add_argument("ell", type=int)
    p.add_argument("n", type=int)
    p.add_argument("out", help="edge-list output path")
    p.add_argument("--b-order-seed", type=int, default=None,
                   help="shuffle the C-to-B schedule's base order")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    gsub = p.add_subparsers(dest="kind", required=True)
    q = gsub.add_parser("random", help="every outdegree exactly d")
    q.add_argument("n", type=int)
    q.add_argument("d", type=int)
    q.add_argument("--seed", type=int, default=None)
    q.add_argument("-o", "--out")
    q.set_defaults(fn=cmd_gen)
    q = gsub.add_parser("transitive", help="transitive tournament")
    q.add_argument("n", type=int)
    q.add_argument("-o", "--out")
    q.set_defaults(fn=cmd_gen)
    q = gsub.add_parser("complete", help="complete bidirected graph")
    q.add_argument("n", type=int)
    q.add_argument("-o", "--out")
    q.set_defaults(fn=cmd_gen)

    p = sub.add_parser("dense-peel", help="indegree-threshold peel keyed to alpha")
    p.add_argument("input", nargs="?")
    p.add_argument("--random", type=int, nargs="+", metavar="X")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--alpha", type=float, default=None,
                       help="outdegree ratio to key the threshold to")
    group.add_argument("--measure", action="store_true",
                       help="key to the measured min outdegree / n (default)")
    p.add_argument("--oriented", action="store_true",
                   help="use the oriented-graph threshold branch")
    p.add_argument("--survivor", help="write the induced survivor subgraph here")
    p.set_defaults(fn=cmd_dense_peel)

    p = sub.add_parser("sweep", help="CSV of both envelope branches over an alpha grid")
    p.add_argument("--from", type=float, required=True)
    p.add_argument("--to", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--mode", choices=("digraph", "oriented"), default="digraph")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("verify", help="run the scaled check battery")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.fn(args)
    except SemicoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"elapsed: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code
