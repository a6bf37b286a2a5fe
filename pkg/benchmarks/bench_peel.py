"""Compare the compiled kernels against the pure-Python fallbacks.

Runs each kernel on the same seeded graphs through both implementations,
checks the outputs agree, and prints a table of per-call times with the
speedup. Invoke as: python benchmarks/bench_peel.py [--quick]
"""

import argparse
import math
import sys
import time

import numpy as np

from semicore import _kernels_py
from semicore._dispatch import HAVE_EXT
from semicore.digraph import gen_random_min_outdegree
from semicore.oracle import neighbor_masks


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def same(a, b):
    if isinstance(a, tuple) and isinstance(a[0], (int, np.integer)):
        return a[0] == b[0] and int(a[1]) == int(b[1])
    if isinstance(a, tuple):
        return all(np.array_equal(np.asarray(x), np.asarray(y)) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def run_case(name, py_fn, cy_fn, repeats):
    t_py, r_py = best_of(py_fn, repeats)
    if cy_fn is None:
        print(f"{name:<38} {t_py * 1e3:>10.2f} ms {'n/a':>12} {'n/a':>9}")
        return
    t_cy, r_cy = best_of(cy_fn, repeats)
    if not same(r_py, r_cy):
        print(f"{name:<38} OUTPUT MISMATCH", file=sys.stderr)
        sys.exit(1)
    print(
        f"{name:<38} {t_py * 1e3:>10.2f} ms {t_cy * 1e3:>9.2f} ms "
        f"{t_py / t_cy:>8.1f}x"
    )


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller sizes")
    args = parser.parse_args()

    if not HAVE_EXT:
        print("compiled kernels unavailable; timing the fallback only\n")
        cy = None
    else:
        from semicore import _kernels as cy

    peel_shapes = [(1000, 30), (5000, 50), (20000, 80)]
    brute_ns = [14, 18, 20]
    if args.quick:
        peel_shapes = peel_shapes[:2]
        brute_ns = brute_ns[:2]

    print(f"{'case':<38} {'pure':>13} {'compiled':>12} {'speedup':>9}")
    for n, d in peel_shapes:
        g = gen_random_min_outdegree(n, d, seed=7)
        csr = (g.out_indptr, g.out_indices, g.in_indptr, g.in_indices)
        run_case(
            f"peel n={n} d={d} (m={g.m})",
            lambda: _kernels_py.peel_kernel(*csr),
            (lambda: cy.peel_kernel(*csr)) if cy else None,
            repeats=3,
        )
        tc = math.ceil(0.4 * d)
        run_case(
            f"threshold-peel n={n} tc={tc}",
            lambda: _kernels_py.threshold_peel_kernel(
                g.out_indptr, g.out_indices, g.in_indptr, tc
            ),
            (
                lambda: cy.threshold_peel_kernel(
                    g.out_indptr, g.out_indices, g.in_indptr, tc
                )
            )
            if cy
            else None,
            repeats=3,
        )
    for n in brute_ns:
        g = gen_random_min_outdegree(n, 3, seed=7)
        out_masks, in_masks = neighbor_masks(g)
        om = np.array(out_masks, dtype=np.uint64)
        im = np.array(in_masks, dtype=np.uint64)
        run_case(
            f"brute-force n={n} (2^{n} subsets)",
            lambda: _kernels_py.brute_kernel(out_masks, in_masks),
            (lambda: cy.brute_kernel(om, im)) if cy else None,
            repeats=1,
        )


if __name__ == "__main__":
    main()
