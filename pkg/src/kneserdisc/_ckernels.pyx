# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twins of the _pykernels functions.

Masks are limited to 64 bits here; the public APIs guard universe sizes
long before that limit matters.  Semantics, visit order, and tie-breaking
match _pykernels exactly.
"""

from array import array
from math import comb

from libc.stdlib cimport free, malloc

BACKEND = "compiled"

ctypedef unsigned long long u64


cdef inline int _popcount(u64 x) noexcept nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _ctz(u64 x) noexcept nogil:
    cdef int c = 0
    while not (x & 1):
        x >>= 1
        c += 1
    return c


def exhaustive_min_max(int n, edge_masks, int r, long long w2,
                       unsigned long long start, unsigned long long stop):
    """Gray-code sweep over blue-set masks with index in [start, stop)."""
    cdef int num_edges = len(edge_masks)
    if num_edges == 0:
        return 0, 0
    cdef u64 *ems = <u64 *> malloc(num_edges * sizeof(u64))
    cdef long long *d2 = <long long *> malloc(num_edges * sizeof(long long))
    # CSR incidence: which edges contain each vertex.
    cdef int *inc_off = <int *> malloc((n + 1) * sizeof(int))
    cdef int *deg = <int *> malloc(n * sizeof(int))
    cdef int *inc = NULL
    cdef int i, ei, v, total
    cdef u64 m, bit, mask, gi
    cdef long long step = 2 * r, hi, a, x, best2
    cdef u64 best_mask
    cdef u64 idx
    try:
        for ei in range(num_edges):
            ems[ei] = edge_masks[ei]
        for v in range(n):
            deg[v] = 0
        total = 0
        for ei in range(num_edges):
            m = ems[ei]
            while m:
                deg[_ctz(m)] += 1
                m &= m - 1
                total += 1
        inc = <int *> malloc((total if total else 1) * sizeof(int))
        inc_off[0] = 0
        for v in range(n):
            inc_off[v + 1] = inc_off[v] + deg[v]
            deg[v] = 0
        for ei in range(num_edges):
            m = ems[ei]
            while m:
                v = _ctz(m)
                inc[inc_off[v] + deg[v]] = ei
                deg[v] += 1
                m &= m - 1

        mask = (start >> 1) ^ start
        with nogil:
            for ei in range(num_edges):
                d2[ei] = step * _popcount(mask & ems[ei]) \
                    - 2 * _popcount(ems[ei]) + w2
            best2 = -1
            best_mask = 0
            idx = start
            while True:
                hi = 0
                for ei in range(num_edges):
                    x = d2[ei]
                    a = x if x >= 0 else -x
                    if a > hi:
                        hi = a
                if best2 < 0 or hi < best2 or (hi == best2 and mask < best_mask):
                    best2 = hi
                    best_mask = mask
                idx += 1
                if idx >= stop:
                    break
                v = _ctz(idx)
                bit = (<u64> 1) << v
                mask ^= bit
                if mask & bit:
                    for i in range(inc_off[v], inc_off[v + 1]):
                        d2[inc[i]] += step
                else:
                    for i in range(inc_off[v], inc_off[v + 1]):
                        d2[inc[i]] -= step
        return best2, best_mask
    finally:
        free(ems)
        free(d2)
        free(inc_off)
        free(deg)
        if inc != NULL:
            free(inc)


def assign_labels(int n, int k, masks, thrs, long long c):
    """First-match labels over all k-subsets in colexicographic order."""
    cdef long long total = comb(n, k)
    codes = array("l", bytes(array("l").itemsize * total))
    cdef long[::1] out = codes
    cdef int num = len(masks)
    cdef u64 *ms = <u64 *> malloc((num if num else 1) * sizeof(u64))
    cdef long long *ts = <long long *> malloc((num if num else 1) * sizeof(long long))
    cdef long long idx
    cdef int j, code
    cdef u64 mask, low, ripple
    try:
        for j in range(num):
            ms[j] = masks[j]
            ts[j] = thrs[j]
        mask = ((<u64> 1) << k) - 1 if k else 0
        with nogil:
            for idx in range(total):
                code = -1
                for j in range(num):
                    if c * _popcount(mask & ms[j]) > ts[j]:
                        code = j
                        break
                out[idx] = code
                low = mask & (~mask + 1)
                ripple = mask + low
                if low:
                    mask = ripple | ((mask ^ ripple) >> (_ctz(low) + 2))
        return codes
    finally:
        free(ms)
        free(ts)


def low_intersection_pairs(masks, long long s, long long max_pairs):
    """Index pairs (i, j), i < j, with |masks[i] & masks[j]| < s."""
    cdef int count = len(masks)
    cdef u64 *ms = <u64 *> malloc((count if count else 1) * sizeof(u64))
    cdef int i, j
    out = []
    try:
        for i in range(count):
            ms[i] = masks[i]
        for i in range(count):
            for j in range(i + 1, count):
                if _popcount(ms[i] & ms[j]) < s:
                    out.append((i, j))
                    if len(out) >= max_pairs:
                        return out
        return out
    finally:
        free(ms)


def signed_low_pairs(plus, minus, long long threshold, long long max_pairs):
    """Pairs of signed vectors with scalar product below threshold."""
    cdef int count = len(plus)
    cdef u64 *ps = <u64 *> malloc((count if count else 1) * sizeof(u64))
    cdef u64 *ns = <u64 *> malloc((count if count else 1) * sizeof(u64))
    cdef int i, j
    cdef long long sp
    out = []
    try:
        for i in range(count):
            ps[i] = plus[i]
            ns[i] = minus[i]
        for i in range(count):
            for j in range(i + 1, count):
                sp = (_popcount(ps[i] & ps[j]) + _popcount(ns[i] & ns[j])
                      - _popcount(ps[i] & ns[j]) - _popcount(ns[i] & ps[j]))
                if sp < threshold:
                    out.append((i, j))
                    if len(out) >= max_pairs:
                        return out
        return out
    finally:
        free(ps)
        free(ns)
