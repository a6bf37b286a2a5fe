"""Parameterized check battery.

Each check returns a CheckResult and is pure apart from PRNG use, so the
CLI can run a scaled-down battery and the acceptance tests the full one
through the same code.
"""

from __future__ import annotations

import math
import os
import subprocess
import sys
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import dense
from .digraph import DiGraph, build_digraph, gen_random_min_outdegree
from .extremal import TournamentParams, extremal_tournament, sharpness_cap
from .oracle import brute_max_min_semidegree
from .peel import (
    guarantee_holds,
    peel_semidegree,
    semidegree_core,
    semidegree_guarantee,
)

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    elapsed: float

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"[{tag}] {self.name} ({self.elapsed:.2f}s) {self.detail}"


def _timed(name, fn):
    start = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name, ok, detail, time.perf_counter() - start)


def _random_graph(rng, n: int) -> DiGraph:
    p = rng.uniform(0.05, 0.95)
    mat = rng.random((n, n)) < p
    np.fill_diagonal(mat, False)
    return DiGraph.from_adjacency_matrix(mat)


def check_oracle_agreement(
    max_n: int = 10, samples: int = 10000, seed: int = DEFAULT_SEED, exhaustive_n: int = 4
) -> CheckResult:
    """Peel c must equal the brute-force c: every digraph up to
    exhaustive_n vertices, then `samples` random graphs per size up to
    max_n."""

    def run():
        rng = np.random.default_rng(seed)
        graphs = 0
        bad = 0
        for n in range(1, min(exhaustive_n, max_n) + 1):
            slots = [(u, w) for u in range(n) for w in range(n) if u != w]
            for code in range(1 << len(slots)):
                arcs = [slots[i] for i in range(len(slots)) if code >> i & 1]
                g = build_digraph(n, arcs)
                graphs += 1
                if peel_semidegree(g).best_value != brute_max_min_semidegree(g)[0]:
                    bad += 1
        for n in range(4, max_n + 1):
            for _ in range(samples):
                g = _random_graph(rng, n)
                graphs += 1
                if peel_semidegree(g).best_value != brute_max_min_semidegree(g)[0]:
                    bad += 1
        return bad == 0, f"{graphs} graphs, {bad} disagreements"

    return _timed("oracle-agreement", run)


def check_degree_guarantee(
    total: int = 500, seed: int = DEFAULT_SEED, ns: tuple[int, ...] = (50, 200, 1000)
) -> CheckResult:
    """2*n*c >= d*(d+1) on generated graphs with exact outdegree d,
    cycling d across ceil(sqrt(2n)), ceil(n/10), ceil(n/3)."""

    def run():
        grid = [
            (n, d)
            for n in ns
            for d in (math.isqrt(2 * n - 1) + 1, -(-n // 10), -(-n // 3))
        ]
        bad = 0
        for i in range(total):
            n, d = grid[i % len(grid)]
            g = gen_random_min_outdegree(n, d, seed + i)
            if g.min_out_degree() != d:
                bad += 1
                continue
            c = peel_semidegree(g).best_value
            if not guarantee_holds(n, d, c):
                bad += 1
        return bad == 0, f"{total} graphs over {len(grid)} (n,d) shapes, {bad} violations"

    return _timed("degree-guarantee", run)


def _is_tournament(g: DiGraph) -> bool:
    if g.m != g.n * (g.n - 1) // 2:
        return False
    mat = g.adjacency_matrix()
    both = mat & mat.T
    either = mat | mat.T
    np.fill_diagonal(either, True)
    return not both.any() and either.all()


def check_construction() -> CheckResult:
    """Structural checks of the tournament family over k, ell in 1..3 at
    the minimum order and 7 above it, plus brute-force cross-checks of
    two small instances."""

    def run():
        problems = []
        for k in (1, 2, 3):
            for ell in (1, 2, 3):
                base = TournamentParams.make(k, ell, None)
                for n in (base.n0, base.n0 + 7):
                    g, params, parts = extremal_tournament(k, ell, n)
                    label = f"(k={k}, ell={ell}, n={n})"
                    if not _is_tournament(g):
                        problems.append(f"{label} not a tournament")
                    if g.min_out_degree() != params.d:
                        problems.append(f"{label} min outdegree != d")
                    mat = g.adjacency_matrix()
                    from_c = mat[np.ix_(list(parts.c), list(parts.b))].sum(axis=0)
                    if not (from_c == ell).all():
                        problems.append(f"{label} B in-neighbors in C != ell")
                    c_val = peel_semidegree(g).best_value
                    if c_val > ell:
                        problems.append(f"{label} peel value {c_val} > ell")
                    if n == params.n0:
                        ell_out, cap = sharpness_cap(params)
                        if not ell_out <= cap:
                            problems.append(f"{label} ell above cap")
        for k, ell, n in ((1, 1, 3), (2, 1, 10)):
            g, params, _ = extremal_tournament(k, ell, n)
            c_peel = peel_semidegree(g).best_value
            c_brute, _ = brute_max_min_semidegree(g)
            if c_peel != c_brute or c_brute > ell:
                problems.append(f"oracle mismatch on (k={k}, ell={ell}, n={n})")
        return not problems, "; ".join(problems) or "18 instances + 2 oracle cross-checks"

    return _timed("construction", run)


def check_sharpness(ell: int = 2, ks: tuple[int, ...] = (2, 5, 10)) -> CheckResult:
    """ratio = ell / (d(d+1)/(2 n0)) stays below 1 + (k+1)/k^2 and
    decreases toward 1 as k grows. Exact rational arithmetic."""

    def run():
        ratios = []
        for k in ks:
            params = TournamentParams.make(k, ell, None)
            ratio = Fraction(ell) / semidegree_guarantee(params.n0, params.d)
            if ratio > 1 + Fraction(k + 1, k * k):
                return False, f"k={k} ratio {ratio} above cap"
            ratios.append(ratio)
        if not all(r > 1 for r in ratios):
            return False, "ratio fell to 1 or below"
        if not all(a > b for a, b in zip(ratios, ratios[1:])):
            return False, f"ratios not decreasing: {ratios}"
        return True, "ratios " + ", ".join(f"{float(r):.4f}" for r in ratios)

    return _timed("sharpness-trend", run)


def check_dense_identities(count: int = 1000, seed: int = DEFAULT_SEED) -> CheckResult:
    """Closed-form identities: the arc-budget surplus vanishes at
    tau = alpha - beta on both branches, and the two envelope crossovers
    match their independent characterizations."""

    def run():
        rng = np.random.default_rng(seed)
        worst = 0.0
        for alpha in rng.uniform(1e-9, 1.0, size=count):
            tau = alpha - dense.threshold_ratio_digraph(alpha)
            worst = max(worst, abs(dense.arc_budget_surplus(alpha, tau)))
        for alpha in rng.uniform(1e-9, 0.5, size=count):
            tau = alpha - dense.threshold_ratio_oriented(alpha)
            worst = max(worst, abs(dense.arc_budget_surplus_oriented(alpha, tau)))
        if worst > 1e-10:
            return False, f"surplus residual {worst:.3e} above 1e-10"
        x = dense.envelope_crossover()
        closed = math.sqrt(2.0 * math.sqrt(2.0) + 2.0) - math.sqrt(2.0)
        if abs(x - closed) > 1e-12:
            return False, "crossover drifted from closed form"
        if round(x, 4) != 0.7832:
            return False, f"crossover {x} not 0.7832 to 4 decimals"
        bisected = dense.bisect_root(
            lambda a: dense.threshold_ratio_digraph(a) - a * a / 2.0, 0.7, 0.85
        )
        if abs(x - bisected) > 1e-9:
            return False, "crossover disagrees with bisected branch equality"
        if abs(dense.threshold_ratio_digraph(x) - x * x / 2.0) > 1e-9:
            return False, "branches disagree at the crossover"
        y = dense.envelope_crossover_oriented()
        if not y < 0.4528:
            return False, f"oriented crossover {y} not below 0.4528"
        if abs(dense.oriented_crossover_quartic(y)) > 1e-9:
            return False, "oriented quartic residual too large"
        if abs(dense.threshold_ratio_oriented(y) - y * y / 2.0) > 1e-9:
            return False, "oriented branches disagree at the crossover"
        return True, f"{2 * count} sampled alphas, worst surplus {worst:.2e}"

    return _timed("dense-identities", run)


def check_dense_peel_guarantee(
    num_seeds: int = 20,
    seed: int = DEFAULT_SEED,
    n: int = 400,
    d: int = 340,
) -> CheckResult:
    """Threshold peel on outdegree-regular graphs: nonempty survivor,
    removed fraction below alpha - beta + 2/n, survivor indegree at least
    ceil(beta n) and outdegree at least (alpha - tau0) n - 1."""

    def run():
        alpha = d / n
        beta = dense.threshold_ratio_digraph(alpha)
        threshold = beta * n
        for i in range(num_seeds):
            g = gen_random_min_outdegree(n, d, seed + i)
            rep = dense.indegree_threshold_peel(g, threshold, alpha=alpha, beta=beta)
            if not rep.survivor:
                return False, f"seed {seed + i}: empty survivor"
            if not rep.removed_fraction < alpha - beta + 2.0 / n:
                return False, f"seed {seed + i}: removed fraction {rep.removed_fraction}"
            if rep.survivor_min_indegree < math.ceil(threshold):
                return False, f"seed {seed + i}: survivor indegree too small"
            if rep.survivor_min_outdegree < (alpha - rep.removed_fraction) * n - 1:
                return False, f"seed {seed + i}: survivor outdegree too small"
        return True, f"{num_seeds} seeds at n={n}, d={d}"

    return _timed("dense-peel-guarantee", run)


def _run_cli(args: list[str], cwd: str) -> tuple[bytes, int]:
    env = dict(os.environ)
    env["PYTHONPATH"] = os.pathsep.join(p for p in sys.path if p)
    proc = subprocess.run(
        [sys.executable, "-m", "semicore", *args],
        cwd=cwd,
        env=env,
        capture_output=True,
    )
    return proc.stdout, proc.returncode


def check_cli_determinism() -> CheckResult:
    """Byte-identical stdout and output files for repeated seeded runs of
    the peel and construct commands."""

    def run():
        with tempfile.TemporaryDirectory() as tmp:
            jobs = [
                ("peel", ["peel", "--random", "200", "20", "7", "--trace", "trace.csv"],
                 "trace.csv"),
                ("construct", ["construct", "2", "1", "10", "graph.txt"], "graph.txt"),
            ]
            for name, args, outfile in jobs:
                runs = []
                for _ in range(2):
                    out, code = _run_cli(args, tmp)
                    if code != 0:
                        return False, f"{name} exited {code}"
                    runs.append((out, Path(tmp, outfile).read_bytes()))
                if runs[0] != runs[1]:
                    return False, f"{name} output differs between identical runs"
        return True, "peel and construct byte-identical across repeated runs"

    return _timed("cli-determinism", run)


def check_core_order_independence(
    num_graphs: int = 100, num_orders: int = 50, n: int = 30, seed: int = DEFAULT_SEED
) -> CheckResult:
    """semidegree_core returns the same set under shuffled scan orders."""

    def run():
        rng = np.random.default_rng(seed)
        for i in range(num_graphs):
            p = rng.uniform(0.05, 0.35)
            mat = rng.random((n, n)) < p
            np.fill_diagonal(mat, False)
            g = DiGraph.from_adjacency_matrix(mat)
            k = 1 + i % 3
            base = semidegree_core(g, k)
            for _ in range(num_orders):
                order = rng.permutation(n).tolist()
                if semidegree_core(g, k, scan_order=order) != base:
                    return False, f"graph {i} (k={k}) core depends on scan order"
        return True, f"{num_graphs} graphs x {num_orders} orders at n={n}"

    return _timed("core-order-independence", run)


def scaled_battery(max_n: int, samples: int, seed: int) -> list[CheckResult]:
    """The battery the `verify` CLI command runs."""
    return [
        check_oracle_agreement(max_n=max_n, samples=samples, seed=seed,
                               exhaustive_n=min(4, max_n)),
        check_degree_guarantee(total=min(60, samples), seed=seed, ns=(50, 200)),
        check_construction(),
        check_sharpness(),
        check_dense_identities(count=min(1000, samples), seed=seed),
        check_dense_peel_guarantee(num_seeds=2, seed=seed),
        check_core_order_independence(num_graphs=10, num_orders=8, seed=seed),
        check_cli_determinism(),
    ]
