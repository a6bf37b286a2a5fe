from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semicore.digraph import (
    build_digraph,
    gen_complete_bidirected,
    gen_random_min_outdegree,
    gen_transitive_tournament,
    induced_subgraph,
)
from semicore.errors import DegreeTooLarge, EmptyGraph, TraceMismatch
from semicore.peel import (
    OrderSplit,
    PeelTrace,
    guarantee_holds,
    max_min_semidegree,
    peel_diagnostics,
    peel_semidegree,
    peel_semidegree_reference,
    semidegree_core,
    semidegree_guarantee,
    trace_csv,
)


def triangle():
    return build_digraph(3, [(0, 1), (1, 2), (2, 0)])


class TestTraces:
    def test_triangle(self):
        trace = peel_semidegree(triangle())
        assert trace.order == (2, 1, 0)
        assert trace.values == (0, 0, 1)
        assert trace.reasons == ("InMin", "InMin", "InMin")
        assert trace.best_value == 1
        assert trace.best_index == 3
        assert trace.witness() == frozenset({0, 1, 2})

    def test_transitive_tournament_peels_from_the_top(self):
        trace = peel_semidegree(gen_transitive_tournament(5))
        # the top vertex always has indegree 0, so removal walks down the
        # ranking and every step value stays 0
        assert trace.order == (0, 1, 2, 3, 4)
        assert trace.values == (0, 0, 0, 0, 0)
        assert trace.best_value == 0
        assert trace.best_index == 1
        assert set(trace.reasons) == {"InMin"}

    def test_digon(self):
        trace = peel_semidegree(build_digraph(2, [(0, 1), (1, 0)]))
        assert trace.best_value == 1
        assert trace.witness() == frozenset({0, 1})

    def test_removal_rows_round_trip(self):
        trace = peel_semidegree(gen_random_min_outdegree(12, 3, seed=5))
        rows = list(trace.removal_rows())
        assert [r[0] for r in rows] == list(range(1, 13))
        assert [r[1] for r in rows] == list(range(12, 0, -1))
        # row for paper index i describes order[i-1]
        for _, i, v, val, reason in rows:
            assert trace.order[i - 1] == v
            assert trace.values[i - 1] == val
            assert trace.reasons[i - 1] == reason

    def test_empty_graph_rejected(self):
        g, _ = induced_subgraph(triangle(), [])
        with pytest.raises(EmptyGraph):
            peel_semidegree(g)
        with pytest.raises(EmptyGraph):
            peel_semidegree_reference(g)

    def test_reason_out_min(self):
        # vertex 0: outdeg 0, indeg 1; vertices 1 and 2 sit on a digon so
        # both have semidegree 1. The only minimum-attaining vertex is 0,
        # attained through its outdegree
        g = build_digraph(3, [(1, 0), (2, 1), (1, 2)])
        trace = peel_semidegree(g)
        first_removed = trace.order[-1]
        assert first_removed == 0
        assert trace.reasons[-1] == "OutMin"

    def test_values_match_induced_min_semidegree(self):
        g = gen_random_min_outdegree(15, 4, seed=77)
        trace = peel_semidegree(g)
        for i in (1, 5, 10, 15):
            sub, _ = induced_subgraph(g, trace.order[:i])
            assert sub.min_semidegree() == trace.values[i - 1]


class TestMaxMin:
    def test_triangle(self):
        assert max_min_semidegree(triangle()) == (1, frozenset({0, 1, 2}))

    def test_complete_bidirected(self):
        c, witness = max_min_semidegree(gen_complete_bidirected(4))
        assert c == 3
        assert witness == frozenset(range(4))

    def test_witness_is_sound(self):
        for seed in range(6):
            g = gen_random_min_outdegree(40, 6, seed=seed)
            c, witness = max_min_semidegree(g)
            sub, _ = induced_subgraph(g, witness)
            assert sub.min_semidegree() >= c


def random_graph_cases():
    shapes = [(8, 2), (12, 3), (20, 4), (33, 5), (50, 2)]
    return [gen_random_min_outdegree(n, d, seed=n * 31 + d) for n, d in shapes]


def test_reference_and_fast_traces_agree():
    for g in random_graph_cases():
        assert peel_semidegree(g) == peel_semidegree_reference(g)


digraph_strategy = st.integers(2, 9).flatmap(
    lambda n: st.builds(
        lambda arcs: build_digraph(n, arcs),
        st.sets(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda p: p[0] != p[1]
            ),
            max_size=n * (n - 1),
        ),
    )
)


@given(digraph_strategy)
@settings(max_examples=150, deadline=None)
def test_fast_trace_matches_reference(g):
    assert peel_semidegree(g) == peel_semidegree_reference(g)


@given(digraph_strategy, st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_adding_an_arc_never_lowers_best_value(g, rnd):
    missing = [
        (u, w)
        for u in range(g.n)
        for w in range(g.n)
        if u != w and not g.has_arc(u, w)
    ]
    if not missing:
        return
    arc = rnd.choice(missing)
    before = peel_semidegree(g).best_value
    bigger = build_digraph(g.n, list(g.arcs()) + [arc])
    assert peel_semidegree(bigger).best_value >= before


class TestCore:
    def test_k_zero_is_everything(self):
        assert semidegree_core(triangle(), 0) == frozenset({0, 1, 2})

    def test_triangle_cores(self):
        assert semidegree_core(triangle(), 1) == frozenset({0, 1, 2})
        assert semidegree_core(triangle(), 2) == frozenset()

    def test_transitive_has_no_positive_core(self):
        assert semidegree_core(gen_transitive_tournament(6), 1) == frozenset()

    def test_pendant_vertex_excluded(self):
        # triangle plus a vertex with one outgoing arc and nothing inbound
        g = build_digraph(4, [(0, 1), (1, 2), (2, 0), (3, 0)])
        assert semidegree_core(g, 1) == frozenset({0, 1, 2})

    def test_core_at_best_value_is_nonempty(self):
        for g in random_graph_cases():
            c = peel_semidegree(g).best_value
            assert semidegree_core(g, c)
            assert semidegree_core(g, c + 1) == frozenset()

    def test_core_contains_witness(self):
        g = gen_random_min_outdegree(30, 5, seed=3)
        c, witness = max_min_semidegree(g)
        assert witness <= semidegree_core(g, c)

    def test_scan_order_never_matters(self):
        g = gen_random_min_outdegree(18, 4, seed=11)
        base = semidegree_core(g, 3)
        assert semidegree_core(g, 3, scan_order=list(reversed(range(18)))) == base

    def test_scan_order_validated(self):
        with pytest.raises(ValueError):
            semidegree_core(triangle(), 1, scan_order=[0, 1])
        with pytest.raises(ValueError):
            semidegree_core(triangle(), 1, scan_order=[0, 1, 1])

    def test_negative_k_rejected(self):
        with pytest.raises(ValueError):
            semidegree_core(triangle(), -1)

    def test_core_induced_degrees(self):
        g = gen_random_min_outdegree(25, 6, seed=8)
        k = 3
        core = semidegree_core(g, k)
        if core:
            sub, _ = induced_subgraph(g, core)
            assert sub.min_semidegree() >= k


class TestDiagnostics:
    def test_triangle_identity_order(self):
        splits = peel_diagnostics(triangle(), [0, 1, 2])
        assert splits[2] == OrderSplit(1, 0, 1, 0)
        assert splits[0] == OrderSplit(0, 1, 0, 1)

    def test_split_sums_to_degrees(self):
        g = gen_random_min_outdegree(20, 4, seed=2)
        trace = peel_semidegree(g)
        for v, s in enumerate(peel_diagnostics(g, trace)):
            assert s.out_before + s.out_after == g.out_degree(v)
            assert s.in_before + s.in_after == g.in_degree(v)

    def test_before_counts_reproduce_step_values(self):
        # at removal time exactly the earlier-ordered neighbors remain,
        # and the removed vertex attains the minimum, so its step value
        # is min of its before-counts
        g = gen_random_min_outdegree(16, 3, seed=6)
        trace = peel_semidegree(g)
        splits = peel_diagnostics(g, trace)
        for i, v in enumerate(trace.order):
            s = splits[v]
            assert trace.values[i] == min(s.out_before, s.in_before)

    def test_sink_has_no_earlier_in_neighbors(self):
        g = gen_transitive_tournament(3)
        trace = peel_semidegree(g)
        splits = peel_diagnostics(g, trace)
        # the global sink (vertex 0) leads the peel order, so none of its
        # in-neighbors can sit before it
        assert splits[0].in_before == 0

    def test_rejects_non_permutation(self):
        with pytest.raises(TraceMismatch):
            peel_diagnostics(triangle(), [0, 1])
        with pytest.raises(TraceMismatch):
            peel_diagnostics(triangle(), [0, 1, 1])


class TestGuarantee:
    def test_small_values(self):
        assert semidegree_guarantee(3, 1) == Fraction(1, 3)
        assert semidegree_guarantee(200, 20) == Fraction(21, 20)
        assert semidegree_guarantee(7, 0) == 0

    def test_holds_is_integer_exact(self):
        # c = 1 against bound 21/20 means 2*200*1 >= 20*21
        assert guarantee_holds(200, 20, 2)
        assert not guarantee_holds(200, 20, 1)

    def test_domain(self):
        with pytest.raises(EmptyGraph):
            semidegree_guarantee(0, 0)
        with pytest.raises(ValueError):
            semidegree_guarantee(5, -1)
        with pytest.raises(DegreeTooLarge):
            semidegree_guarantee(5, 5)

    def test_peel_always_clears_the_bound(self):
        for g in random_graph_cases():
            d = g.min_out_degree()
            c = peel_semidegree(g).best_value
            assert guarantee_holds(g.n, d, c)
            assert Fraction(c) >= semidegree_guarantee(g.n, d)


def test_trace_csv_shape():
    trace = peel_semidegree(triangle())
    lines = trace_csv(trace).splitlines()
    assert lines[0] == "step_index,paper_index,vertex,step_value,reason"
    assert len(lines) == 4
    assert lines[1] == "1,3,0,1,InMin"


def test_trace_is_frozen():
    trace = peel_semidegree(triangle())
    with pytest.raises(AttributeError):
        trace.best_value = 9
    assert isinstance(trace, PeelTrace)
