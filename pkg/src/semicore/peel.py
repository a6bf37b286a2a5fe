"""Greedy semidegree peeling and what it certifies.

Peeling removes, one step at a time, a vertex attaining the current
minimum semidegree min(outdeg, indeg). Writing the removals as
v_n, v_{n-1}, ..., v_1 (v_n first) and G_i for the subgraph induced by
{v_1..v_i}, the i-th step value is the minimum semidegree of G_i. The
running maximum of step values equals the maximum over all induced
subgraphs H of the minimum semidegree of H, and the prefix {v_1..v_i*}
at the maximizing step is a witness subgraph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from . import _dispatch
from .digraph import DiGraph
from .errors import DegreeTooLarge, EmptyGraph, TraceMismatch

REASON_IN = "InMin"
REASON_OUT = "OutMin"
_REASONS = (REASON_IN, REASON_OUT)


@dataclass(frozen=True, slots=True)
class PeelTrace:
    """Complete record of one peeling run.

    order lists v_1..v_n (so order[-1] was removed first and order[0]
    last); values[i] is the minimum semidegree of the subgraph induced
    by order[:i+1], which is what vertex order[i] attained when it was
    removed; reasons[i] is "InMin" when that vertex had indeg <= outdeg
    at removal and "OutMin" otherwise. best_value is max(values) and
    order[:best_index] is the witness prefix attaining it.
    """

    order: tuple[int, ...]
    values: tuple[int, ...]
    reasons: tuple[str, ...]
    best_value: int
    best_index: int

    @property
    def n(self) -> int:
        return len(self.order)

    def witness(self) -> frozenset[int]:
        return frozenset(self.order[: self.best_index])

    def removal_rows(self) -> Iterator[tuple[int, int, int, int, str]]:
        """(step_index, paper_index, vertex, step_value, reason) per removal,
        first removal first. step_index counts 1..n in removal order;
        paper_index i means the vertex was v_i, i.e. order[i-1]."""
        n = self.n
        for t in range(n):
            i = n - t
            yield t + 1, i, self.order[i - 1], self.values[i - 1], self.reasons[i - 1]


def peel_semidegree(g: DiGraph) -> PeelTrace:
    """Run the greedy peel.

    Selection at each step: among vertices attaining the current minimum
    semidegree, prefer one attaining it through its indegree, then the
    smallest current indegree, then the smallest label. All three rules
    collapse into one comparison: remove the vertex minimizing
    (min(outdeg, indeg), indeg, label).
    """
    if g.n == 0:
        raise EmptyGraph("cannot peel an empty graph")
    order_r, values_r, reasons_r = _dispatch.peel(g)
    order = tuple(int(x) for x in order_r[::-1])
    values = tuple(int(x) for x in values_r[::-1])
    reasons = tuple(_REASONS[int(x)] for x in reasons_r[::-1])
    best_value = max(values)
    best_index = values.index(best_value) + 1
    return PeelTrace(order, values, reasons, best_value, best_index)


def peel_semidegree_reference(g: DiGraph) -> PeelTrace:
    """Naive quadratic peel that rescans every remaining vertex per step.
    Kept as an independent route for differential tests; must produce a
    trace identical to peel_semidegree."""
    if g.n == 0:
        raise EmptyGraph("cannot peel an empty graph")
    n = g.n
    outdeg = [g.out_degree(v) for v in range(n)]
    indeg = [g.in_degree(v) for v in range(n)]
    alive = [True] * n
    order_r: list[int] = []
    values_r: list[int] = []
    reasons_r: list[str] = []
    for _ in range(n):
        v = min(
            (v for v in range(n) if alive[v]),
            key=lambda v: (min(outdeg[v], indeg[v]), indeg[v], v),
        )
        order_r.append(v)
        values_r.append(min(outdeg[v], indeg[v]))
        reasons_r.append(REASON_IN if indeg[v] <= outdeg[v] else REASON_OUT)
        alive[v] = False
        for u in g.in_neighbors(v):
            if alive[u]:
                outdeg[u] -= 1
        for w in g.out_neighbors(v):
            if alive[w]:
                indeg[w] -= 1
    order = tuple(reversed(order_r))
    values = tuple(reversed(values_r))
    best_value = max(values)
    return PeelTrace(
        order,
        values,
        tuple(reversed(reasons_r)),
        best_value,
        values.index(best_value) + 1,
    )


def max_min_semidegree(g: DiGraph) -> tuple[int, frozenset[int]]:
    """(c, witness): c is the largest minimum semidegree over all induced
    subgraphs, witness a vertex set whose induced subgraph attains it."""
    trace = peel_semidegree(g)
    return trace.best_value, trace.witness()


def semidegree_core(
    g: DiGraph, k: int, scan_order: Sequence[int] | None = None
) -> frozenset[int]:
    """The (k, k)-core: the unique maximal vertex set whose induced
    subgraph has every outdegree and indegree >= k. May be empty; k = 0
    returns every vertex. scan_order only changes the order in which
    violating vertices are discovered, never the result.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return frozenset(range(g.n))
    n = g.n
    if scan_order is None:
        seed: Sequence[int] = range(n)
    else:
        seed = [int(v) for v in scan_order]
        if sorted(seed) != list(range(n)):
            raise ValueError("scan_order must be a permutation of the vertices")
    outdeg = [g.out_degree(v) for v in range(n)]
    indeg = [g.in_degree(v) for v in range(n)]
    alive = [True] * n
    enqueued = [False] * n
    queue = deque()
    for v in seed:
        if outdeg[v] < k or indeg[v] < k:
            queue.append(v)
            enqueued[v] = True
    # Each vertex is enqueued at most once: once its degree drops below k
    # it can never recover, so a queued vertex is certainly deleted.
    while queue:
        v = queue.popleft()
        alive[v] = False
        for u in g.in_neighbors(v):
            u = int(u)
            if alive[u]:
                outdeg[u] -= 1
                if outdeg[u] < k and not enqueued[u]:
                    queue.append(u)
                    enqueued[u] = True
        for w in g.out_neighbors(v):
            w = int(w)
            if alive[w]:
                indeg[w] -= 1
                if indeg[w] < k and not enqueued[w]:
                    queue.append(w)
                    enqueued[w] = True
    return frozenset(v for v in range(n) if alive[v])


class OrderSplit(NamedTuple):
    """Neighborhood sizes split around a vertex's position in the peel
    order: out/in neighbors occurring before (left) or after (right)."""

    out_before: int
    out_after: int
    in_before: int
    in_after: int


def peel_diagnostics(g: DiGraph, trace: PeelTrace | Sequence[int]) -> list[OrderSplit]:
    """Per-vertex split of each neighborhood by the trace's order.

    Index v of the result is the split for vertex v; "before" counts
    neighbors placed earlier in order (smaller paper index). Accepts a
    PeelTrace or a bare vertex order. Raises TraceMismatch when the
    order is not a permutation of g's vertices.
    """
    order = trace.order if isinstance(trace, PeelTrace) else tuple(trace)
    if sorted(order) != list(range(g.n)):
        raise TraceMismatch("order is not a permutation of the graph's vertices")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    splits = []
    for v in range(g.n):
        ob = sum(1 for w in g.out_neighbors(v) if pos[int(w)] < pos[v])
        ib = sum(1 for u in g.in_neighbors(v) if pos[int(u)] < pos[v])
        splits.append(
            OrderSplit(ob, g.out_degree(v) - ob, ib, g.in_degree(v) - ib)
        )
    return splits


def semidegree_guarantee(n: int, d: int) -> Fraction:
    """Exact rational d(d+1)/(2n): every digraph on n vertices with
    minimum outdegree >= d has an induced subgraph with minimum
    semidegree at least this value."""
    if n < 1:
        raise EmptyGraph("guarantee needs n >= 1")
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d > n - 1:
        raise DegreeTooLarge(f"outdegree {d} impossible with {n} vertices")
    return Fraction(d * (d + 1), 2 * n)


def guarantee_holds(n: int, d: int, c: int) -> bool:
    """Integer-exact form of c >= d(d+1)/(2n)."""
    return 2 * n * c >= d * (d + 1)


def trace_csv(trace: PeelTrace) -> str:
    """CSV text of the removals, one row per step in removal order."""
    lines = ["step_index,paper_index,vertex,step_value,reason"]
    for row in trace.removal_rows():
        lines.append(",".join(str(x) for x in row[:4]) + f",{row[4]}")
    return "\n".join(lines) + "\n"
