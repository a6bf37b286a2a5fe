"""Pin the compiled kernels to the pure-Python reference.

Every public kernel must return identical values from both backends on
identical inputs, including tie-breaking. Skipped wholesale when the
extension was not built.
"""

import math

import numpy as np
import pytest

from semicore import _kernels_py
from semicore._dispatch import HAVE_EXT
from semicore.digraph import (
    gen_complete_bidirected,
    gen_random_min_outdegree,
    gen_transitive_tournament,
)
from semicore.oracle import neighbor_masks

if HAVE_EXT:
    from semicore import _kernels
else:
    pytest.skip("compiled kernels unavailable", allow_module_level=True)


def graph_zoo():
    yield gen_transitive_tournament(9)
    yield gen_complete_bidirected(7)
    for seed in range(12):
        n = 10 + 13 * (seed % 4)
        d = 2 + seed % 5
        yield gen_random_min_outdegree(n, d, seed=seed)
    yield gen_random_min_outdegree(300, 40, seed=999)


def csr(g):
    return g.out_indptr, g.out_indices, g.in_indptr, g.in_indices


@pytest.mark.parametrize("g", list(graph_zoo()), ids=lambda g: f"n{g.n}m{g.m}")
def test_peel_kernel_identical(g):
    py = _kernels_py.peel_kernel(*csr(g))
    cy = _kernels.peel_kernel(*csr(g))
    for a, b in zip(py, cy):
        assert np.array_equal(np.asarray(a), np.asarray(b))


@pytest.mark.parametrize("g", list(graph_zoo()), ids=lambda g: f"n{g.n}m{g.m}")
def test_threshold_kernel_identical(g):
    for tc in (0, 1, 2, math.ceil(g.n / 3), g.n):
        py = _kernels_py.threshold_peel_kernel(
            g.out_indptr, g.out_indices, g.in_indptr, tc
        )
        cy = _kernels.threshold_peel_kernel(
            g.out_indptr, g.out_indices, g.in_indptr, tc
        )
        assert np.array_equal(np.asarray(py), np.asarray(cy))


def test_brute_kernel_identical():
    for seed in range(15):
        g = gen_random_min_outdegree(9, 1 + seed % 4, seed=seed)
        out_masks, in_masks = neighbor_masks(g)
        py = _kernels_py.brute_kernel(out_masks, in_masks)
        cy = _kernels.brute_kernel(
            np.array(out_masks, dtype=np.uint64), np.array(in_masks, dtype=np.uint64)
        )
        assert (py[0], int(py[1])) == (cy[0], int(cy[1]))


def test_dispatch_reports_backend():
    from semicore._dispatch import backend

    assert backend() == "compiled"
