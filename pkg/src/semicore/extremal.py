"""Tournaments with minimum outdegree d whose every subgraph has small
minimum semidegree, showing the peel guarantee is near-tight.

The family is parametrized by integers k, ell >= 1. With d = 2*k*ell - 1
the tournament splits into parts A (ell vertices), B (k*d), C (d), plus
optional padding, each part internally transitive. B beats A, A beats C,
and C sends exactly ell * |B| arcs back to B, spread so that every B
vertex receives exactly ell of them and the vertex of C with r
out-neighbors inside C sends exactly d - r of them. That makes every
outdegree at least d while capping every subgraph's minimum semidegree
at ell, and ell is within a (1 + (k+1)/k^2) factor of d(d+1)/(2n).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .digraph import DiGraph, build_digraph
from .errors import InternalBudgetError, TooFewVertices


@dataclass(frozen=True, slots=True)
class TournamentParams:
    """Validated parameter bundle: d = 2*k*ell - 1 and the minimum order
    n0 = (k+1)*d + ell are derived; ell * |B| = d(d+1)/2 always holds."""

    k: int
    ell: int
    n: int
    d: int
    n0: int
    a_size: int
    b_size: int
    c_size: int

    @classmethod
    def make(cls, k: int, ell: int, n: int | None) -> "TournamentParams":
        """n = None picks the minimal order n0."""
        if k < 1 or ell < 1:
            raise ValueError("k and ell must be >= 1")
        d = 2 * k * ell - 1
        n0 = (k + 1) * d + ell
        if n is None:
            n = n0
        if n < n0:
            raise TooFewVertices(f"need n >= {n0} for k={k}, ell={ell}, got {n}")
        params = cls(k, ell, n, d, n0, ell, k * d, d)
        assert params.ell * params.b_size == d * (d + 1) // 2
        assert params.b_size >= d
        return params


@dataclass(frozen=True, slots=True)
class PartRanges:
    """Contiguous label ranges of the four parts."""

    a: range
    b: range
    c: range
    padding: range

    def label_of(self, v: int) -> str:
        for name, part in (("A", self.a), ("B", self.b), ("C", self.c), ("P", self.padding)):
            if v in part:
                return name
        raise ValueError(f"vertex {v} outside the construction")


def extremal_tournament(
    k: int, ell: int, n: int | None = None, b_order_seed: int | None = None
) -> tuple[DiGraph, TournamentParams, PartRanges]:
    """Build the tournament on labels 0..n-1.

    Layout: A = 0..ell-1, then B, then C, then padding. Inside every part
    the higher label beats the lower. The C-to-B arcs walk a schedule of
    ell concatenated copies of B; the C vertex with d - i out-neighbors
    inside C (i = 1..d) consumes the next i schedule entries. Remaining
    B/C pairs orient B to C. Padding vertices are appended one at a time,
    each beating everything added before it, so they keep indegree 0 at
    insertion and disturb no other vertex's outdegree.

    b_order_seed permutes the schedule's base order of B (one shuffle of
    a seeded PRNG); the default is ascending labels.
    """
    params = TournamentParams.make(k, ell, n)
    d = params.d
    a_part = range(0, ell)
    b_part = range(ell, ell + k * d)
    c_part = range(ell + k * d, params.n0)
    padding = range(params.n0, n)

    arcs: list[tuple[int, int]] = []
    for part in (a_part, b_part, c_part):
        verts = list(part)
        for hi in range(len(verts)):
            for lo in range(hi):
                arcs.append((verts[hi], verts[lo]))
    for b in b_part:
        for a in a_part:
            arcs.append((b, a))
    for a in a_part:
        for c in c_part:
            arcs.append((a, c))

    base = list(b_part)
    if b_order_seed is not None:
        random.Random(b_order_seed).shuffle(base)
    schedule = base * ell
    pos = 0
    c_to_b: set[tuple[int, int]] = set()
    for i in range(1, d + 1):
        cv = c_part.start + (d - i)  # the C vertex with d - i out-neighbors in C
        chunk = schedule[pos : pos + i]
        pos += i
        if len(set(chunk)) != i:
            raise InternalBudgetError(
                f"schedule chunk for C vertex {cv} repeats a B vertex"
            )
        for b in chunk:
            arcs.append((cv, b))
            c_to_b.add((cv, b))
    if pos != len(schedule):
        raise InternalBudgetError("schedule not fully consumed")
    for b in b_part:
        for cv in c_part:
            if (cv, b) not in c_to_b:
                arcs.append((b, cv))
    for p in padding:
        for u in range(p):
            arcs.append((p, u))

    g = build_digraph(n, arcs)
    return g, params, PartRanges(a_part, b_part, c_part, padding)


def sharpness_cap(params: TournamentParams) -> tuple[int, Fraction]:
    """(ell, cap) with cap = (1 + (k+1)/k^2) * d(d+1)/(2n), both exact.

    ell equals (d+1)/(2k) by construction, and at the minimum order
    n = n0 the cap dominates ell, which is asserted here. For larger n
    the cap keeps shrinking and the comparison is the caller's business.
    """
    k, d, n = params.k, params.d, params.n
    assert 2 * k * params.ell == d + 1
    cap = Fraction(k * k + k + 1, k * k) * Fraction(d * (d + 1), 2 * n)
    if n == params.n0:
        assert params.ell <= cap
    return params.ell, cap
