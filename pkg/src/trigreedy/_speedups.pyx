# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled routing kernels; the fast twin of _kernels_py.

Array contract and outcome codes are identical to the pure module; the
test suite compares the two backends pairwise for bit-identical output.
"""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint8_t

cdef int SECTOR_TABLE[27]
_table = (
    0, 0, 5, 0, 0, 5, 3, 3, 4,
    0, 0, 5, 0, 0, 0, 3, 0, 0,
    1, 1, 6, 1, 0, 0, 2, 0, 0,
)
cdef int _ti
for _ti in range(27):
    SECTOR_TABLE[_ti] = _table[_ti]


cdef inline int _sign(int64_t x) nogil:
    return (x > 0) - (x < 0)


cdef inline int64_t _absll(int64_t x) nogil:
    return x if x >= 0 else -x


cdef inline int _classify(const int64_t[:, :] C, int a, int b) nogil:
    cdef int code = (
        (_sign(C[b, 0] - C[a, 0]) + 1) * 9
        + (_sign(C[b, 1] - C[a, 1]) + 1) * 3
        + (_sign(C[b, 2] - C[a, 2]) + 1)
    )
    return SECTOR_TABLE[code]


cdef inline int64_t _hexd(const int64_t[:, :] C, int a, int b) nogil:
    cdef int64_t m = _absll(C[b, 0] - C[a, 0])
    cdef int64_t y = _absll(C[b, 1] - C[a, 1])
    if y > m:
        m = y
    y = _absll(C[b, 2] - C[a, 2])
    if y > m:
        m = y
    return m


cdef int _sector_step(
    const int32_t[:] indptr,
    const int32_t[:] indices,
    const int64_t[:, :] C,
    const int32_t[:, :] S,
    int u,
    int t,
) nogil:
    cdef int a, w, best, i, ka, kb, va, vb, sector, c, s
    cdef int s0, s1, s2, best_score, score, score_a, score_b
    cdef int64_t hu, ha, hb, hw, best_h
    for a in range(indptr[u], indptr[u + 1]):
        if indices[a] == t:
            return t
    if u < 3:
        s0 = _sign(C[t, 0] - C[u, 0])
        s1 = _sign(C[t, 1] - C[u, 1])
        s2 = _sign(C[t, 2] - C[u, 2])
        best = -1
        best_score = 4
        for a in range(indptr[u], indptr[u + 1]):
            w = indices[a]
            score = (
                (_sign(C[t, 0] - C[w, 0]) != s0)
                + (_sign(C[t, 1] - C[w, 1]) != s1)
                + (_sign(C[t, 2] - C[w, 2]) != s2)
            )
            if score < best_score or (score == best_score and w < best):
                best = w
                best_score = score
        return best
    sector = _classify(C, u, t)
    if sector % 2 == 1:
        return S[u, (sector + 1) // 2 - 1]
    i = sector // 2
    ka = i
    kb = i % 3 + 1
    va = S[u, ka - 1]
    vb = S[u, kb - 1]
    hu = _hexd(C, u, t)
    ha = _hexd(C, va, t)
    hb = _hexd(C, vb, t)
    if ha >= hu and hb >= hu:
        best = -1
        best_h = hu
        for a in range(indptr[u], indptr[u + 1]):
            w = indices[a]
            hw = _hexd(C, w, t)
            if hw < best_h or (hw == best_h and best >= 0 and w < best):
                best = w
                best_h = hw
        return best
    if hb >= hu:
        return va
    if ha >= hu:
        return vb
    score_a = 0
    score_b = 0
    for c in range(3):
        s = _sign(C[t, c] - C[u, c])
        if s == 0:
            continue
        if _sign(C[t, c] - C[va, c]) == -s:
            score_a += 1
        if _sign(C[t, c] - C[vb, c]) == -s:
            score_b += 1
    return va if score_a <= score_b else vb


def sector_all_pairs(indptr, indices, coords, sat, int max_hops):
    cdef const int32_t[:] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef const int32_t[:] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef const int64_t[:, :] C = np.ascontiguousarray(coords, dtype=np.int64)
    cdef const int32_t[:, :] S = np.ascontiguousarray(sat, dtype=np.int32)
    cdef int n = ip.shape[0] - 1
    outcomes = np.zeros(n * n, dtype=np.uint8)
    hops = np.zeros(n * n, dtype=np.int32)
    visited = np.full(n, -1, dtype=np.int64)
    cdef uint8_t[:] o = outcomes
    cdef int32_t[:] hv = hops
    cdef int64_t[:] vis = visited
    cdef int s, t, u, v, h
    cdef int64_t pair
    with nogil:
        for s in range(n):
            for t in range(n):
                if s == t:
                    continue
                pair = <int64_t> s * n + t
                u = s
                vis[u] = pair
                h = 0
                while True:
                    v = _sector_step(ip, idx, C, S, u, t)
                    if v < 0:
                        o[pair] = 2
                        break
                    h += 1
                    if v == t:
                        o[pair] = 1
                        hv[pair] = h
                        break
                    if vis[v] == pair:
                        o[pair] = 3
                        break
                    vis[v] = pair
                    if h >= max_hops:
                        o[pair] = 4
                        break
                    u = v
    return outcomes, hops


def euclid_all_pairs(indptr, indices, xs, ys, int max_hops):
    cdef const int32_t[:] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef const int32_t[:] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef const int64_t[:] X = np.ascontiguousarray(xs, dtype=np.int64)
    cdef const int64_t[:] Y = np.ascontiguousarray(ys, dtype=np.int64)
    cdef int n = ip.shape[0] - 1
    outcomes = np.zeros(n * n, dtype=np.uint8)
    hops = np.zeros(n * n, dtype=np.int32)
    cdef uint8_t[:] o = outcomes
    cdef int32_t[:] hv = hops
    cdef int s, t, u, h, a, w, best
    cdef int64_t pair, du, d2, best_d2, dx, dy
    with nogil:
        for s in range(n):
            for t in range(n):
                if s == t:
                    continue
                pair = <int64_t> s * n + t
                u = s
                dx = X[u] - X[t]
                dy = Y[u] - Y[t]
                du = dx * dx + 3 * dy * dy
                h = 0
                while True:
                    best = -1
                    best_d2 = du
                    for a in range(ip[u], ip[u + 1]):
                        w = idx[a]
                        dx = X[w] - X[t]
                        dy = Y[w] - Y[t]
                        d2 = dx * dx + 3 * dy * dy
                        if d2 < best_d2:
                            best = w
                            best_d2 = d2
                    if best < 0:
                        o[pair] = 2
                        break
                    h += 1
                    if best == t:
                        o[pair] = 1
                        hv[pair] = h
                        break
                    if h >= max_hops:
                        o[pair] = 4
                        break
                    u = best
                    du = best_d2
    return outcomes, hops


def bfs_all_pairs(indptr, indices):
    cdef const int32_t[:] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef const int32_t[:] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef int n = ip.shape[0] - 1
    dist = np.full(n * n, -1, dtype=np.int32)
    queue = np.zeros(n, dtype=np.int32)
    cdef int32_t[:] d = dist
    cdef int32_t[:] q = queue
    cdef int s, u, w, a, head, tail
    cdef int64_t base
    cdef int32_t du
    with nogil:
        for s in range(n):
            base = <int64_t> s * n
            d[base + s] = 0
            q[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = q[head]
                head += 1
                du = d[base + u]
                for a in range(ip[u], ip[u + 1]):
                    w = idx[a]
                    if d[base + w] < 0:
                        d[base + w] = du + 1
                        q[tail] = w
                        tail += 1
    return dist
