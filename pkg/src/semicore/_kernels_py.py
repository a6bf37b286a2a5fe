"""Pure-Python kernels: always available, exact same results as the
compiled twins in _kernels.pyx. These are the readable reference
implementations; the .pyx file only re-expresses them in C types.
"""

from __future__ import annotations

import heapq

import numpy as np


def peel_kernel(out_indptr, out_indices, in_indptr, in_indices):
    """Greedy min-semidegree peeling over CSR adjacency.

    Each step removes the vertex minimizing (min(outdeg, indeg), indeg,
    label) in the remaining graph, which realizes the rule "remove a
    vertex attaining the minimum semidegree, indegree attainers first,
    then smallest indegree, then smallest label".

    Returns (order, value, reason) in removal order; reason is 0 when
    the removed vertex had indeg <= outdeg and 1 otherwise.
    """
    outp = out_indptr.tolist()
    outi = out_indices.tolist()
    inp = in_indptr.tolist()
    ini = in_indices.tolist()
    n = len(outp) - 1
    outdeg = [outp[v + 1] - outp[v] for v in range(n)]
    indeg = [inp[v + 1] - inp[v] for v in range(n)]
    key = [min(o, i) for o, i in zip(outdeg, indeg)]
    alive = bytearray([1]) * n
    # Lazy heap: entries are (key, indeg, vertex); degrees only decrease,
    # so the freshest entry for a vertex is also its smallest.
    heap = [(key[v], indeg[v], v) for v in range(n)]
    heapq.heapify(heap)
    order = np.empty(n, dtype=np.int32)
    value = np.empty(n, dtype=np.int32)
    reason = np.empty(n, dtype=np.uint8)
    for t in range(n):
        while True:
            k, ind, v = heapq.heappop(heap)
            if alive[v] and key[v] == k and indeg[v] == ind:
                break
        order[t] = v
        value[t] = k
        reason[t] = 0 if indeg[v] <= outdeg[v] else 1
        alive[v] = 0
        for j in range(inp[v], inp[v + 1]):
            u = ini[j]
            if alive[u]:
                outdeg[u] -= 1
                nk = min(outdeg[u], indeg[u])
                if nk < key[u]:
                    key[u] = nk
                    heapq.heappush(heap, (nk, indeg[u], u))
        for j in range(outp[v], outp[v + 1]):
            w = outi[j]
            if alive[w]:
                indeg[w] -= 1
                nk = min(outdeg[w], indeg[w])
                key[w] = nk
                heapq.heappush(heap, (nk, indeg[w], w))
    return order, value, reason


def threshold_peel_kernel(out_indptr, out_indices, in_indptr, threshold_ceil):
    """Repeatedly remove the smallest-label vertex whose current indegree
    is < threshold_ceil. Returns the removed vertices in removal order.

    A vertex's indegree only decreases, so it crosses the threshold at
    most once and a plain min-heap of labels suffices.
    """
    outp = out_indptr.tolist()
    outi = out_indices.tolist()
    inp = in_indptr.tolist()
    n = len(outp) - 1
    tc = int(threshold_ceil)
    indeg = [inp[v + 1] - inp[v] for v in range(n)]
    alive = bytearray([1]) * n
    heap = [v for v in range(n) if indeg[v] < tc]
    heapq.heapify(heap)
    removed = []
    while heap:
        v = heapq.heappop(heap)
        alive[v] = 0
        removed.append(v)
        for j in range(outp[v], outp[v + 1]):
            w = outi[j]
            if alive[w]:
                indeg[w] -= 1
                if indeg[w] == tc - 1:
                    heapq.heappush(heap, w)
    return np.array(removed, dtype=np.int32)


def brute_kernel(out_masks, in_masks):
    """Exhaustive max-min-semidegree over all nonempty vertex subsets,
    given per-vertex neighbor bitmasks. Returns (c, best_mask) where
    best_mask encodes the lexicographically smallest attaining subset
    (subsets compared as ascending vertex tuples).

    Subsets with fewer than c_best + 1 vertices cannot attain c_best,
    so they are skipped outright.
    """
    n = len(out_masks)
    best_c = 0
    best = 1  # subset {0}: always attains 0 and is the lex minimum
    for mask in range(2, 1 << n):
        if mask.bit_count() <= best_c:
            continue
        mm = mask
        s_min = n
        while mm:
            v = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            od = (out_masks[v] & mask).bit_count()
            idg = (in_masks[v] & mask).bit_count()
            s = od if od < idg else idg
            if s < s_min:
                s_min = s
                if s_min < best_c:
                    break
        if s_min < best_c:
            continue
        if s_min > best_c:
            best_c = s_min
            best = mask
        elif _lex_less(mask, best):
            best = mask
    return best_c, best


def _lex_less(a, b):
    """Whether subset-mask a precedes b when both are read as ascending
    vertex tuples (prefix precedes its extensions)."""
    while a and b:
        la = a & -a
        lb = b & -b
        if la != lb:
            return la < lb
        a ^= la
        b ^= lb
    return a == 0 and b != 0
