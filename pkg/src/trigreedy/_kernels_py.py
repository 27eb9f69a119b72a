"""Pure-Python routing kernels; the fallback twin of _speedups.

Same array contract as the compiled module: graphs arrive as CSR int32
arrays (adjacency in rotation order), coordinates as an int64 (n, 3)
array, saturated entries as an int32 (n, 3) array with -1 rows for the
corners.  Outcome codes: 0 unused (diagonal), 1 delivered, 2 stuck,
3 loop, 4 hop budget.  Both backends must produce bit-identical results;
tests compare them pairwise.
"""

from __future__ import annotations

from collections import deque

import numpy as np

#: sign pattern of (t - u), encoded as (s0+1)*9 + (s1+1)*3 + (s2+1) -> sector
SECTOR_TABLE = (
    0, 0, 5, 0, 0, 5, 3, 3, 4,
    0, 0, 5, 0, 0, 0, 3, 0, 0,
    1, 1, 6, 1, 0, 0, 2, 0, 0,
)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sector_all_pairs(indptr, indices, coords, sat, max_hops):
    n = len(indptr) - 1
    ip = [int(x) for x in indptr]
    idx = [int(x) for x in indices]
    C = [tuple(row) for row in coords.tolist()]
    S = [tuple(row) for row in sat.tolist()]
    nbrs = [idx[ip[v] : ip[v + 1]] for v in range(n)]
    nbr_sets = [set(a) for a in nbrs]

    def classify(a: int, b: int) -> int:
        ca, cb = C[a], C[b]
        code = (
            (_sign(cb[0] - ca[0]) + 1) * 9
            + (_sign(cb[1] - ca[1]) + 1) * 3
            + (_sign(cb[2] - ca[2]) + 1)
        )
        return SECTOR_TABLE[code]

    def hexd(a: int, b: int) -> int:
        ca, cb = C[a], C[b]
        return max(abs(cb[0] - ca[0]), abs(cb[1] - ca[1]), abs(cb[2] - ca[2]))

    def step(u: int, t: int) -> int:
        """Next vertex, or -1 for no progressing choice."""
        if t in nbr_sets[u]:
            return t
        cu, ct = C[u], C[t]
        if u < 3:
            s0 = _sign(ct[0] - cu[0])
            s1 = _sign(ct[1] - cu[1])
            s2 = _sign(ct[2] - cu[2])
            best, best_score = -1, 4
            for w in nbrs[u]:
                cw = C[w]
                score = (
                    (_sign(ct[0] - cw[0]) != s0)
                    + (_sign(ct[1] - cw[1]) != s1)
                    + (_sign(ct[2] - cw[2]) != s2)
                )
                if score < best_score or (score == best_score and w < best):
                    best, best_score = w, score
            return best
        sector = classify(u, t)
        if sector % 2:
            return S[u][(sector + 1) // 2 - 1]
        i = sector // 2
        ka, kb = i, i % 3 + 1
        va, vb = S[u][ka - 1], S[u][kb - 1]
        hu = hexd(u, t)
        ha, hb = hexd(va, t), hexd(vb, t)
        if ha >= hu and hb >= hu:
            best, best_h = -1, hu
            for w in nbrs[u]:
                hw = hexd(w, t)
                if hw < best_h or (hw == best_h and 0 <= best and w < best):
                    best, best_h = w, hw
            return best
        if hb >= hu:
            return va
        if ha >= hu:
            return vb
        score_a = score_b = 0
        ca, cb = C[va], C[vb]
        for c in range(3):
            s = _sign(ct[c] - cu[c])
            if not s:
                continue
            if _sign(ct[c] - ca[c]) == -s:
                score_a += 1
            if _sign(ct[c] - cb[c]) == -s:
                score_b += 1
        return va if score_a <= score_b else vb

    outcomes = bytearray(n * n)
    hops = [0] * (n * n)
    visited = [-1] * n
    for s in range(n):
        base = s * n
        for t in range(n):
            if s == t:
                continue
            pair = base + t
            u = s
            visited[u] = pair
            h = 0
            while True:
                v = step(u, t)
                if v < 0:
                    outcomes[pair] = 2
                    break
                h += 1
                if v == t:
                    outcomes[pair] = 1
                    hops[pair] = h
                    break
                if visited[v] == pair:
                    outcomes[pair] = 3
                    break
                visited[v] = pair
                if h >= max_hops:
                    outcomes[pair] = 4
                    break
                u = v
    return (
        np.frombuffer(bytes(outcomes), dtype=np.uint8).copy(),
        np.asarray(hops, dtype=np.int32),
    )


def euclid_all_pairs(indptr, indices, xs, ys, max_hops):
    n = len(indptr) - 1
    ip = [int(x) for x in indptr]
    idx = [int(x) for x in indices]
    X = [int(x) for x in xs]
    Y = [int(y) for y in ys]
    nbrs = [idx[ip[v] : ip[v + 1]] for v in range(n)]

    outcomes = bytearray(n * n)
    hops = [0] * (n * n)
    for s in range(n):
        base = s * n
        for t in range(n):
            if s == t:
                continue
            pair = base + t
            u = s
            du = (X[u] - X[t]) ** 2 + 3 * (Y[u] - Y[t]) ** 2
            h = 0
            while True:
                best, best_d2 = -1, du
                for w in nbrs[u]:
                    d2 = (X[w] - X[t]) ** 2 + 3 * (Y[w] - Y[t]) ** 2
                    if d2 < best_d2:
                        best, best_d2 = w, d2
                if best < 0:
                    outcomes[pair] = 2
                    break
                h += 1
                if best == t:
                    outcomes[pair] = 1
                    hops[pair] = h
                    break
                if h >= max_hops:
                    outcomes[pair] = 4
                    break
                u, du = best, best_d2
    return (
        np.frombuffer(bytes(outcomes), dtype=np.uint8).copy(),
        np.asarray(hops, dtype=np.int32),
    )


def bfs_all_pairs(indptr, indices):
    n = len(indptr) - 1
    ip = [int(x) for x in indptr]
    idx = [int(x) for x in indices]
    nbrs = [idx[ip[v] : ip[v + 1]] for v in range(n)]
    dist = np.full(n * n, -1, dtype=np.int32)
    for s in range(n):
        base = s * n
        dist[base + s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[base + u]
            for w in nbrs[u]:
                if dist[base + w] < 0:
                    dist[base + w] = du + 1
                    queue.append(w)
    return dist
