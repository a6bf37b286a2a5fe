# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels. Same contracts and same tie-breaking as
_kernels_py; only the representation changes (packed int64 heap
entries, builtin popcount). Differential tests pin the two together.
"""

import numpy as np

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline void heap_push(long long* h, Py_ssize_t* size, long long item) noexcept nogil:
    cdef Py_ssize_t i = size[0]
    cdef Py_ssize_t parent
    cdef long long tmp
    h[i] = item
    size[0] = i + 1
    while i > 0:
        parent = (i - 1) >> 1
        if h[parent] <= h[i]:
            break
        tmp = h[parent]; h[parent] = h[i]; h[i] = tmp
        i = parent


cdef inline long long heap_pop(long long* h, Py_ssize_t* size) noexcept nogil:
    cdef long long top = h[0]
    cdef long long tmp
    cdef Py_ssize_t n = size[0] - 1
    cdef Py_ssize_t i = 0, child
    size[0] = n
    if n > 0:
        h[0] = h[n]
        while True:
            child = 2 * i + 1
            if child >= n:
                break
            if child + 1 < n and h[child + 1] < h[child]:
                child += 1
            if h[i] <= h[child]:
                break
            tmp = h[i]; h[i] = h[child]; h[child] = tmp
            i = child
    return top


cdef enum:
    SHIFT = 21
    FIELD_MASK = (1 << SHIFT) - 1


def peel_kernel(const int[::1] out_indptr, const int[::1] out_indices,
                const int[::1] in_indptr, const int[::1] in_indices):
    """See _kernels_py.peel_kernel. Requires n < 2**21 (the dispatcher
    routes larger graphs to the pure fallback)."""
    cdef Py_ssize_t n = out_indptr.shape[0] - 1
    cdef Py_ssize_t m = out_indices.shape[0]
    order_arr = np.empty(n, dtype=np.int32)
    value_arr = np.empty(n, dtype=np.int32)
    reason_arr = np.empty(n, dtype=np.uint8)
    if n == 0:
        return order_arr, value_arr, reason_arr
    cdef int[::1] order = order_arr
    cdef int[::1] value = value_arr
    cdef unsigned char[::1] reason = reason_arr
    cdef Py_ssize_t cap = n + 2 * m + 4
    cdef long long* heap = <long long*> malloc(cap * sizeof(long long))
    cdef int* outdeg = <int*> malloc(n * sizeof(int))
    cdef int* indeg = <int*> malloc(n * sizeof(int))
    cdef int* key = <int*> malloc(n * sizeof(int))
    cdef unsigned char* alive = <unsigned char*> malloc(n)
    if heap == NULL or outdeg == NULL or indeg == NULL or key == NULL or alive == NULL:
        free(heap); free(outdeg); free(indeg); free(key); free(alive)
        raise MemoryError()
    cdef Py_ssize_t size = 0, t, j
    cdef long long item
    cdef int v, u, w, k, ind, nk
    try:
        with nogil:
            for v in range(n):
                outdeg[v] = out_indptr[v + 1] - out_indptr[v]
                indeg[v] = in_indptr[v + 1] - in_indptr[v]
                key[v] = outdeg[v] if outdeg[v] < indeg[v] else indeg[v]
                alive[v] = 1
                heap_push(heap, &size,
                          ((<long long> key[v]) << (2 * SHIFT))
                          | ((<long long> indeg[v]) << SHIFT)
                          | <long long> v)
            for t in range(n):
                while True:
                    item = heap_pop(heap, &size)
                    v = <int> (item & FIELD_MASK)
                    ind = <int> ((item >> SHIFT) & FIELD_MASK)
                    k = <int> (item >> (2 * SHIFT))
                    if alive[v] and key[v] == k and indeg[v] == ind:
                        break
                order[t] = v
                value[t] = k
                reason[t] = 0 if indeg[v] <= outdeg[v] else 1
                alive[v] = 0
                for j in range(in_indptr[v], in_indptr[v + 1]):
                    u = in_indices[j]
                    if alive[u]:
                        outdeg[u] -= 1
                        nk = outdeg[u] if outdeg[u] < indeg[u] else indeg[u]
                        if nk < key[u]:
                            key[u] = nk
                            heap_push(heap, &size,
                                      ((<long long> nk) << (2 * SHIFT))
                                      | ((<long long> indeg[u]) << SHIFT)
                                      | <long long> u)
                for j in range(out_indptr[v], out_indptr[v + 1]):
                    w = out_indices[j]
                    if alive[w]:
                        indeg[w] -= 1
                        nk = outdeg[w] if outdeg[w] < indeg[w] else indeg[w]
                        key[w] = nk
                        heap_push(heap, &size,
                                  ((<long long> nk) << (2 * SHIFT))
                                  | ((<long long> indeg[w]) << SHIFT)
                                  | <long long> w)
    finally:
        free(heap); free(outdeg); free(indeg); free(key); free(alive)
    return order_arr, value_arr, reason_arr


def threshold_peel_kernel(const int[::1] out_indptr, const int[::1] out_indices,
                          const int[::1] in_indptr, long long threshold_ceil):
    """See _kernels_py.threshold_peel_kernel."""
    cdef Py_ssize_t n = out_indptr.shape[0] - 1
    removed_arr = np.empty(n if n > 0 else 0, dtype=np.int32)
    if n == 0:
        return removed_arr
    cdef int[::1] removed = removed_arr
    cdef long long* heap = <long long*> malloc(n * sizeof(long long))
    cdef int* indeg = <int*> malloc(n * sizeof(int))
    cdef unsigned char* alive = <unsigned char*> malloc(n)
    if heap == NULL or indeg == NULL or alive == NULL:
        free(heap); free(indeg); free(alive)
        raise MemoryError()
    cdef Py_ssize_t size = 0, r = 0, j
    cdef int v, w
    cdef long long tc = threshold_ceil
    try:
        with nogil:
            for v in range(n):
                indeg[v] = in_indptr[v + 1] - in_indptr[v]
                alive[v] = 1
                if indeg[v] < tc:
                    heap_push(heap, &size, <long long> v)
            while size > 0:
                v = <int> heap_pop(heap, &size)
                alive[v] = 0
                removed[r] = v
                r += 1
                for j in range(out_indptr[v], out_indptr[v + 1]):
                    w = out_indices[j]
                    if alive[w]:
                        indeg[w] -= 1
                        if indeg[w] == tc - 1:
                            heap_push(heap, &size, <long long> w)
    finally:
        free(heap); free(indeg); free(alive)
    return removed_arr[: r].copy()


cdef inline bint lex_less(unsigned long long a, unsigned long long b) noexcept nogil:
    cdef unsigned long long la, lb
    while a != 0 and b != 0:
        la = a & (~a + 1)
        lb = b & (~b + 1)
        if la != lb:
            return la < lb
        a ^= la
        b ^= lb
    return a == 0 and b != 0


def brute_kernel(const unsigned long long[::1] out_masks, const unsigned long long[::1] in_masks):
    """See _kernels_py.brute_kernel. Caller bounds n (<= 26 or so)."""
    cdef Py_ssize_t n = out_masks.shape[0]
    cdef unsigned long long full = ((<unsigned long long> 1) << n) - 1
    cdef unsigned long long mask = 2, mm, best = 1
    cdef int best_c = 0, s_min, od, idg, s, v
    with nogil:
        while mask <= full:
            if __builtin_popcountll(mask) > best_c:
                mm = mask
                s_min = <int> n
                while mm != 0:
                    v = __builtin_ctzll(mm)
                    mm &= mm - 1
                    od = __builtin_popcountll(out_masks[v] & mask)
                    idg = __builtin_popcountll(in_masks[v] & mask)
                    s = od if od < idg else idg
                    if s < s_min:
                        s_min = s
                        if s_min < best_c:
                            break
                if s_min > best_c:
                    best_c = s_min
                    best = mask
                elif s_min == best_c and lex_less(mask, best):
                    best = mask
            mask += 1
    return best_c, int(best)
