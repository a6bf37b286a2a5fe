"""Kernel selection: the compiled extension when importable, else the
pure-Python fallback. Set SEMICORE_PURE=1 to force the fallback."""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

if os.environ.get("SEMICORE_PURE"):
    _impl = _kernels_py
    HAVE_EXT = False
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        HAVE_EXT = True
    except ImportError:
        _impl = _kernels_py
        HAVE_EXT = False

# The compiled peel packs (key, indeg, vertex) into 21-bit fields.
_PACK_LIMIT = 1 << 21


def backend() -> str:
    return "compiled" if HAVE_EXT else "pure-python"


def peel(g):
    impl = _impl if g.n < _PACK_LIMIT else _kernels_py
    return impl.peel_kernel(g.out_indptr, g.out_indices, g.in_indptr, g.in_indices)


def threshold_peel(g, threshold_ceil: int):
    return _impl.threshold_peel_kernel(
        g.out_indptr, g.out_indices, g.in_indptr, threshold_ceil
    )


def brute(out_masks: list[int], in_masks: list[int]) -> tuple[int, int]:
    if _impl is _kernels_py:
        return _kernels_py.brute_kernel(out_masks, in_masks)
    c, best = _impl.brute_kernel(
        np.asarray(out_masks, dtype=np.uint64), np.asarray(in_masks, dtype=np.uint64)
    )
    return c, best
