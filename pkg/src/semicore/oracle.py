"""Brute-force ground truth for max-min-semidegree.

Enumerates every nonempty vertex subset, so it is exponential by design
and only meant to check the fast path on small graphs.
"""

from __future__ import annotations

from . import _dispatch
from .digraph import DiGraph
from .errors import EmptyGraph, TooLarge

# Beyond this the enumeration stops being a "wait a few seconds" affair
# even compiled, and the bitmask kernels assume it.
HARD_LIMIT = 26


def neighbor_masks(g: DiGraph) -> tuple[list[int], list[int]]:
    """Per-vertex out- and in-neighborhoods as bitmasks."""
    out_masks = [0] * g.n
    in_masks = [0] * g.n
    for v in range(g.n):
        acc = 0
        for w in g.out_neighbors(v):
            acc |= 1 << int(w)
        out_masks[v] = acc
        acc = 0
        for u in g.in_neighbors(v):
            acc |= 1 << int(u)
        in_masks[v] = acc
    return out_masks, in_masks


def brute_max_min_semidegree(
    g: DiGraph, limit: int = 20
) -> tuple[int, frozenset[int]]:
    """Exact (c, best_subset) over all nonempty induced subgraphs.

    best_subset is the lexicographically smallest attaining subset when
    subsets are read as ascending vertex tuples. Subsets smaller than
    c_best + 1 vertices are pruned: a minimum semidegree of c needs at
    least c + 1 vertices. Raises TooLarge when n exceeds the limit.
    """
    if g.n == 0:
        raise EmptyGraph("no nonempty subsets in an empty graph")
    if g.n > min(limit, HARD_LIMIT):
        raise TooLarge(
            f"n={g.n} exceeds the exhaustive limit {min(limit, HARD_LIMIT)}"
        )
    out_masks, in_masks = neighbor_masks(g)
    c, best = _dispatch.brute(out_masks, in_masks)
    members = frozenset(v for v in range(g.n) if best >> v & 1)
    return c, members
