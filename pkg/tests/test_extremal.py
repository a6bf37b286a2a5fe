from fractions import Fraction

import numpy as np
import pytest

from semicore.digraph import induced_subgraph
from semicore.errors import TooFewVertices
from semicore.extremal import (
    PartRanges,
    TournamentParams,
    extremal_tournament,
    sharpness_cap,
)
from semicore.oracle import brute_max_min_semidegree
from semicore.peel import peel_semidegree


def is_tournament(g):
    if 2 * g.m != g.n * (g.n - 1):
        return False
    mat = g.adjacency_matrix().astype(bool)
    if (mat & mat.T).any():
        return False
    return (mat | mat.T | np.eye(g.n, dtype=bool)).all()


class TestParams:
    def test_identities(self):
        p = TournamentParams.make(2, 3, n=None)
        assert p.d == 2 * 2 * 3 - 1 == 11
        assert p.n0 == (p.k + 1) * p.d + p.ell == 36
        assert p.n == p.n0
        assert p.a_size == p.ell
        assert p.b_size == p.k * p.d
        assert p.c_size == p.d
        # the schedule hands each B vertex exactly ell in-arcs from C
        assert p.ell * p.b_size == p.d * (p.d + 1) // 2

    def test_explicit_n(self):
        p = TournamentParams.make(1, 1, n=8)
        assert p.n == 8 and p.n0 == 3

    def test_too_few_vertices(self):
        with pytest.raises(TooFewVertices):
            TournamentParams.make(2, 1, n=9)
        with pytest.raises(TooFewVertices):
            extremal_tournament(2, 1, 9)

    def test_bad_k_ell(self):
        with pytest.raises(ValueError):
            TournamentParams.make(0, 1, n=None)
        with pytest.raises(ValueError):
            TournamentParams.make(1, 0, n=None)


class TestSmallestCase:
    def test_directed_triangle(self):
        g, params, parts = extremal_tournament(1, 1, 3)
        assert (params.d, params.n0) == (1, 3)
        assert sorted(g.arcs()) == [(0, 2), (1, 0), (2, 1)]
        assert parts == PartRanges(range(0, 1), range(1, 2), range(2, 3), range(3, 3))

    def test_padding(self):
        g, params, parts = extremal_tournament(1, 1, 5)
        assert is_tournament(g)
        assert len(parts.padding) == 2
        # padding vertices beat everyone placed before them
        for p in parts.padding:
            for v in range(p):
                assert g.has_arc(p, v)
        assert g.min_out_degree() == params.d
        assert peel_semidegree(g).best_value == 1


class TestStructure:
    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("ell", [1, 2, 3])
    @pytest.mark.parametrize("extra", [0, 7])
    def test_grid(self, k, ell, extra):
        params0 = TournamentParams.make(k, ell, n=None)
        n = params0.n0 + extra
        g, params, parts = extremal_tournament(k, ell, n)
        d = params.d
        assert is_tournament(g)
        assert g.min_out_degree() == d

        mat = g.adjacency_matrix().astype(bool)
        a, b, c = list(parts.a), list(parts.b), list(parts.c)
        # B beats A wholesale, A beats C wholesale
        assert mat[np.ix_(b, a)].all()
        assert mat[np.ix_(a, c)].all()
        # every B vertex receives exactly ell arcs from C
        from_c = mat[np.ix_(c, b)].sum(axis=0)
        assert (from_c == ell).all()
        # peeling never beats the designed ceiling
        assert peel_semidegree(g).best_value <= ell

    def test_c_outdegrees_inside_c(self):
        # inside C the order is transitive, so within-C outdegrees are
        # 0..d-1; the schedule tops each vertex up to exactly d
        g, params, parts = extremal_tournament(2, 2, 23)
        mat = g.adjacency_matrix().astype(bool)
        c = list(parts.c)
        inside = mat[np.ix_(c, c)].sum(axis=1)
        assert sorted(inside.tolist()) == list(range(params.d))
        total = mat[c, :].sum(axis=1)
        assert (total == params.d).all()


class TestOracleCrossChecks:
    def test_triangle_case(self):
        g, _, _ = extremal_tournament(1, 1, 3)
        c, _ = brute_max_min_semidegree(g)
        assert c == 1
        assert peel_semidegree(g).best_value == 1

    def test_k2_case(self):
        g, params, _ = extremal_tournament(2, 1, 10)
        assert (g.n, g.m, params.d) == (10, 45, 3)
        c, witness = brute_max_min_semidegree(g)
        assert c == 1
        assert peel_semidegree(g).best_value == 1
        assert c <= params.ell


class TestShuffledSchedule:
    def test_invariants_survive_reordering(self):
        base, params, parts = extremal_tournament(2, 2, 23)
        alt, params2, parts2 = extremal_tournament(2, 2, 23, b_order_seed=99)
        assert params == params2 and parts == parts2
        assert is_tournament(alt)
        assert alt.min_out_degree() == params.d
        mat = alt.adjacency_matrix().astype(bool)
        from_c = mat[np.ix_(list(parts.c), list(parts.b))].sum(axis=0)
        assert (from_c == params.ell).all()
        # a different schedule really is a different tournament
        assert alt != base


class TestCap:
    def test_exact_value(self):
        _, params, _ = extremal_tournament(2, 1, 10)
        ell, cap = sharpness_cap(params)
        assert ell == 1
        assert cap == Fraction(21, 20)

    def test_triangle_cap_is_tight(self):
        _, params, _ = extremal_tournament(1, 1, 3)
        ell, cap = sharpness_cap(params)
        assert (ell, cap) == (1, Fraction(1))

    def test_cap_formula(self):
        for k, ell in [(1, 1), (2, 3), (3, 2), (5, 2)]:
            params = TournamentParams.make(k, ell, n=None)
            _, cap = sharpness_cap(params)
            d, n = params.d, params.n0
            assert cap == Fraction(k * k + k + 1, k * k) * Fraction(
                d * (d + 1), 2 * n
            )
            assert ell <= cap

    def test_ratio_decreases_in_k(self):
        ratios = []
        for k in (2, 5, 10):
            params = TournamentParams.make(k, 2, n=None)
            bound = Fraction(params.d * (params.d + 1), 2 * params.n0)
            ratios.append(Fraction(params.ell) / bound)
        assert all(r > 1 for r in ratios)
        assert ratios[0] > ratios[1] > ratios[2]
        for k, r in zip((2, 5, 10), ratios):
            assert r <= 1 + Fraction(k + 1, k * k)


def test_skipping_b_leaves_nothing():
    # without B the remaining parts form an acyclic tournament (A beats C,
    # padding beats everything earlier, each part transitive inside), and
    # acyclic means peeling drives the value to zero
    g, params, parts = extremal_tournament(2, 2, 23)
    rest = list(parts.a) + list(parts.c) + list(parts.padding)
    sub, _ = induced_subgraph(g, rest)
    assert peel_semidegree(sub).best_value == 0
    assert peel_semidegree(g).best_value <= params.ell
