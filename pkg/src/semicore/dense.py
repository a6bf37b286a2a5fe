"""Dense-regime analysis: indegree-threshold peeling and the envelopes
describing what minimum semidegree survives it.

For a digraph whose minimum outdegree is alpha * n, deleting vertices of
indegree below beta * n with

    beta = 1 - sqrt(3 - 4*alpha + alpha^2),        alpha in (0, 1]

stops before a tau = alpha - beta fraction is gone, leaving a subgraph
with indegree ratio >= beta and outdegree ratio > alpha - tau. The same
scheme for oriented graphs (no antiparallel pairs, alpha in (0, 1/2])
uses beta = 1 - alpha - sqrt(3 - 8*alpha + 4*alpha^2). Combining each
branch with the always-available alpha^2/2 bound gives the envelopes;
both are capped by the trivial ceiling alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import _dispatch
from .digraph import DiGraph
from .errors import ConvergenceError, DomainError, EmptyGraph


def threshold_ratio_digraph(alpha: float) -> float:
    """Indegree cutoff ratio for general digraphs; domain (0, 1]."""
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha={alpha} outside (0, 1]")
    return 1.0 - math.sqrt(3.0 - 4.0 * alpha + alpha * alpha)


def threshold_ratio_oriented(alpha: float) -> float:
    """Indegree cutoff ratio for oriented graphs; domain (0, 1/2].
    May be negative for small alpha; callers clamp where needed."""
    if not 0.0 < alpha <= 0.5:
        raise DomainError(f"alpha={alpha} outside (0, 0.5]")
    return 1.0 - alpha - math.sqrt(3.0 - 8.0 * alpha + 4.0 * alpha * alpha)


def arc_budget_surplus(alpha: float, tau: float) -> float:
    """tau^2/2 + beta*tau + (1 - tau) - alpha for the digraph branch.

    Positive while the threshold peel can still be running after a tau
    fraction of removals; its root at tau = alpha - beta certifies the
    peel stops before that fraction."""
    beta = threshold_ratio_digraph(alpha)
    return tau * tau / 2.0 + beta * tau + (1.0 - tau) - alpha


def arc_budget_surplus_oriented(alpha: float, tau: float) -> float:
    """Oriented-graph variant: tau^2/2 + beta*tau + (1-tau)(1-alpha) - alpha."""
    beta = threshold_ratio_oriented(alpha)
    return tau * tau / 2.0 + beta * tau + (1.0 - tau) * (1.0 - alpha) - alpha


def digraph_envelope(alpha: float) -> float:
    """max(alpha^2/2, threshold branch); never above the ceiling alpha."""
    value = max(alpha * alpha / 2.0, threshold_ratio_digraph(alpha))
    assert value <= alpha + 1e-12
    return value


def oriented_envelope(alpha: float) -> float:
    """Oriented counterpart of digraph_envelope."""
    value = max(alpha * alpha / 2.0, threshold_ratio_oriented(alpha))
    assert value <= alpha + 1e-12
    return value


def bisect_root(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12
) -> float:
    """Bisection root of f on [lo, hi]; needs a sign change on the bracket."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise ConvergenceError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2.0


def envelope_crossover() -> float:
    """The alpha in (0, 1] where the digraph threshold branch overtakes
    alpha^2/2: sqrt(2*sqrt(2) + 2) - sqrt(2), about 0.7832."""
    return math.sqrt(2.0 * math.sqrt(2.0) + 2.0) - math.sqrt(2.0)


def oriented_crossover_quartic(x: float) -> float:
    """x^4 + 4x^3 - 16x^2 + 24x - 8; its unique root in (0, 0.4528) is
    where the oriented threshold branch overtakes alpha^2/2."""
    return (((x + 4.0) * x - 16.0) * x + 24.0) * x - 8.0


def envelope_crossover_oriented() -> float:
    """Bisected root of the quartic on [0, 0.4528] to 1e-12."""
    return bisect_root(oriented_crossover_quartic, 0.0, 0.4528, tol=1e-12)


@dataclass(frozen=True, slots=True)
class DensePeelReport:
    """Outcome of one indegree-threshold peel.

    alpha is the outdegree ratio the run was keyed to (measured from the
    graph unless the caller supplied one), beta the cutoff ratio when the
    threshold came from a ratio, else None. removed lists deletions in
    order; removed_fraction is len(removed)/n. survivor holds the
    surviving labels ascending; the survivor degree fields are None when
    nothing survives. Ratios are against the original n.
    """

    n: int
    alpha: float
    beta: float | None
    threshold: float
    threshold_ceil: int
    removed: tuple[int, ...]
    removed_fraction: float
    survivor: tuple[int, ...]
    survivor_min_outdegree: int | None
    survivor_min_indegree: int | None
    realized_min_out_ratio: float | None
    realized_min_in_ratio: float | None


def indegree_threshold_peel(
    g: DiGraph,
    threshold: float,
    alpha: float | None = None,
    beta: float | None = None,
) -> DensePeelReport:
    """Repeatedly delete any vertex whose current indegree is strictly
    below threshold, smallest label first among violators, until none
    violate or nothing is left.

    Survivors all end with indegree >= ceil(threshold) inside the
    surviving subgraph, and outdegrees fell by at most the number of
    removals. alpha defaults to the measured min outdegree / n.
    """
    if g.n == 0:
        raise EmptyGraph("cannot threshold-peel an empty graph")
    if threshold < 0:
        raise DomainError("threshold must be nonnegative")
    tc = math.ceil(threshold)
    removed_arr = _dispatch.threshold_peel(g, tc)
    removed = tuple(int(v) for v in removed_arr)
    alive = np.ones(g.n, dtype=bool)
    alive[removed_arr] = False
    survivor = tuple(int(v) for v in np.flatnonzero(alive))
    if survivor:
        src, dst = g.arc_arrays()
        live = alive[src] & alive[dst]
        out_left = np.bincount(src[live], minlength=g.n)[alive]
        in_left = np.bincount(dst[live], minlength=g.n)[alive]
        smo, smi = int(out_left.min()), int(in_left.min())
        ratios = (smo / g.n, smi / g.n)
    else:
        smo = smi = None
        ratios = (None, None)
    if alpha is None:
        alpha = g.min_out_degree() / g.n
    return DensePeelReport(
        n=g.n,
        alpha=alpha,
        beta=beta,
        threshold=threshold,
        threshold_ceil=tc,
        removed=removed,
        removed_fraction=len(removed) / g.n,
        survivor=survivor,
        survivor_min_outdegree=smo,
        survivor_min_indegree=smi,
        realized_min_out_ratio=ratios[0],
        realized_min_in_ratio=ratios[1],
    )


def dense_peel(
    g: DiGraph, alpha: float | None = None, oriented: bool = False
) -> DensePeelReport:
    """Threshold peel keyed to an outdegree ratio: derive beta from alpha
    (measured when not given), clamp a negative beta to a no-op zero
    threshold, and run."""
    if alpha is None:
        alpha = g.min_out_degree() / g.n
    beta = threshold_ratio_oriented(alpha) if oriented else threshold_ratio_digraph(alpha)
    threshold = max(beta, 0.0) * g.n
    return indegree_threshold_peel(g, threshold, alpha=alpha, beta=beta)


class SweepRow(NamedTuple):
    alpha: float
    half_alpha_sq: float
    beta_branch: float
    envelope: float
    ceiling: float


def sweep(alphas, mode: str = "digraph") -> list[SweepRow]:
    """Evaluate both envelope branches on a grid of alpha values."""
    if mode == "digraph":
        branch = threshold_ratio_digraph
    elif mode == "oriented":
        branch = threshold_ratio_oriented
    else:
        raise ValueError(f"unknown mode {mode!r}")
    rows = []
    for alpha in alphas:
        alpha = float(alpha)
        b = branch(alpha)
        rows.append(SweepRow(alpha, alpha * alpha / 2.0, b, max(alpha * alpha / 2.0, b), alpha))
    return rows


def envelope_is_monotone(rows: list[SweepRow]) -> bool:
    """Sanity flag: the envelope should be nondecreasing in alpha."""
    return all(a.envelope <= b.envelope + 1e-12 for a, b in zip(rows, rows[1:]))


def trim_to_min_outdegree(g: DiGraph) -> DiGraph:
    """Keep only the d = min outdegree lowest-label out-neighbors of every
    vertex, making the graph outdegree-regular without changing d. The
    threshold analysis assumes exactly-d outdegrees; this realizes it."""
    d = g.min_out_degree()
    keep = [g.out_neighbors(v)[:d] for v in range(g.n)]
    dst = np.concatenate(keep) if g.n else np.empty(0, dtype=np.int32)
    src = np.repeat(np.arange(g.n, dtype=np.int32), d)
    return DiGraph._from_arc_arrays(g.n, src, dst.astype(np.int32))


def format_report(report: DensePeelReport) -> str:
    """Key-value text block; reals printed with 9 significant digits."""
    def fmt(x):
        return "NA" if x is None else f"{x:.9g}"

    lines = [
        f"n: {report.n}",
        f"alpha: {fmt(report.alpha)}",
        f"beta: {fmt(report.beta)}",
        f"threshold: {fmt(report.threshold)}",
        f"threshold_ceil: {report.threshold_ceil}",
        f"removed: {len(report.removed)}",
        f"removed_fraction: {fmt(report.removed_fraction)}",
        f"survivor_size: {len(report.survivor)}",
        f"survivor_min_outdegree: {report.survivor_min_outdegree if report.survivor_min_outdegree is not None else 'NA'}",
        f"survivor_min_indegree: {report.survivor_min_indegree if report.survivor_min_indegree is not None else 'NA'}",
        f"realized_min_out_ratio: {fmt(report.realized_min_out_ratio)}",
        f"realized_min_in_ratio: {fmt(report.realized_min_in_ratio)}",
    ]
    return "\n".join(lines) + "\n"
