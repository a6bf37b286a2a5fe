"""Acceptance battery.

One test per shipped guarantee, each run at full scale through the same
check functions the `semicore verify` command uses (that command scales
them down; here they run with their full defaults). Every test prints
its one-line result; run with -s to see the lines for passing tests too.
"""

import pytest

from semicore import verify

BUDGETS = {
    "oracle-agreement": 60.0,
    "degree-guarantee": 30.0,
    "construction": 10.0,
    "sharpness-trend": 5.0,
    "dense-identities": 1.0,
    "dense-peel-guarantee": 10.0,
}


def report(res):
    print(res.line())
    assert res.ok, res.detail
    budget = BUDGETS.get(res.name)
    if budget is not None:
        assert res.elapsed < budget, f"{res.name} took {res.elapsed:.1f}s"


@pytest.mark.acceptance
def test_peel_matches_exhaustive_oracle():
    # exact agreement: exhaustive on every digraph with up to 4 vertices,
    # then 10000 seeded random graphs at each size 4..10
    report(verify.check_oracle_agreement(max_n=10, samples=10000, seed=1729))


@pytest.mark.acceptance
def test_degree_guarantee_integer_exact():
    # 500 graphs, n in {50, 200, 1000}, d in {ceil(sqrt(2n)), ceil(n/10),
    # ceil(n/3)}; checks 2*n*c >= d*(d+1) with no rounding anywhere
    report(verify.check_degree_guarantee(total=500, seed=1729))


@pytest.mark.acceptance
def test_construction_correctness():
    report(verify.check_construction())


@pytest.mark.acceptance
def test_sharpness_trend_exact_rationals():
    report(verify.check_sharpness(ell=2, ks=(2, 5, 10)))


@pytest.mark.acceptance
def test_closed_form_identities():
    report(verify.check_dense_identities(count=1000, seed=1729))


@pytest.mark.acceptance
def test_dense_peel_guarantee():
    report(verify.check_dense_peel_guarantee(num_seeds=20, seed=1729))


@pytest.mark.acceptance
def test_cli_byte_determinism():
    report(verify.check_cli_determinism())


@pytest.mark.acceptance
def test_core_order_independence():
    report(verify.check_core_order_independence(num_graphs=100, num_orders=50, n=30))
