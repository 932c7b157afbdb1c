"""numba kernels. Vertex sets are uint64 bitmasks; never mix them with int64."""

from __future__ import annotations

import numpy as np
from numba import njit

_ONE = np.uint64(1)
_ZERO = np.uint64(0)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)


@njit(cache=True)
def popcount(x):
    x = x - ((x >> _S1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    return np.int64((x * _H01) >> _S56)


@njit(cache=True)
def bfs_distances(order, indptr, indices):
    dist = np.full((order, order), -1, dtype=np.int32)
    queue = np.empty(order, dtype=np.int64)
    for s in range(order):
        row = dist[s]
        row[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            dv = row[v] + 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if row[w] < 0:
                    row[w] = dv
                    queue[tail] = w
                    tail += 1
    return dist


@njit(cache=True)
def witness_masks(dist):
    n = dist.shape[0]
    out = np.empty(n * (n - 1) // 2, dtype=np.uint64)
    k = 0
    for a in range(n):
        for b in range(a + 1, n):
            m = _ZERO
            for w in range(n):
                if dist[a, w] != dist[b, w]:
                    m |= _ONE << np.uint64(w)
            out[k] = m
            k += 1
    return out


@njit(cache=True)
def dominance_keep(rows):
    # rows must be sorted by nondecreasing popcount
    m = rows.shape[0]
    keep = np.zeros(m, dtype=np.bool_)
    kept = np.empty(m, dtype=np.uint64)
    nk = 0
    for i in range(m):
        r = rows[i]
        dominated = False
        for j in range(nk):
            if (kept[j] & r) == kept[j]:
                dominated = True
                break
        if not dominated:
            kept[nk] = r
            nk += 1
            keep[i] = True
    return keep


@njit(cache=True)
def greedy_cover(rows, allowed, n):
    m = rows.shape[0]
    covered = np.zeros(m, dtype=np.bool_)
    left = m
    chosen = _ZERO
    while left > 0:
        best_v = -1
        best_hits = 0
        for v in range(n):
            bit = _ONE << np.uint64(v)
            if (allowed & bit) == _ZERO or (chosen & bit) != _ZERO:
                continue
            hits = 0
            for i in range(m):
                if not covered[i] and (rows[i] & bit) != _ZERO:
                    hits += 1
            if hits > best_hits:
                best_hits = hits
                best_v = v
        if best_v < 0:
            return _ZERO, False
        bit = _ONE << np.uint64(best_v)
        chosen |= bit
        for i in range(m):
            if not covered[i] and (rows[i] & bit) != _ZERO:
                covered[i] = True
                left -= 1
    return chosen, True


@njit(cache=True)
def cover_search(rows, allowed, ub, n):
    """Depth-first branch and bound for a hitting set strictly smaller than ub.

    Returns (size, mask, nodes); size is -1 when no hitting set of size < ub
    exists. Rows should be sorted by nondecreasing popcount so the greedy
    disjoint packing gives a useful lower bound.
    """
    m = rows.shape[0]
    cap = n * (n + 1) + 2
    st_chosen = np.empty(cap, dtype=np.uint64)
    st_excl = np.empty(cap, dtype=np.uint64)
    verts = np.empty(n, dtype=np.int64)
    top = 0
    st_chosen[0] = _ZERO
    st_excl[0] = _ZERO
    top = 1
    best = ub
    best_mask = _ZERO
    nodes = 0
    while top > 0:
        top -= 1
        chosen = st_chosen[top]
        excl = st_excl[top]
        nodes += 1
        size = popcount(chosen)
        if size >= best:
            continue
        avail = allowed & ~excl
        packed = _ZERO
        lb = 0
        br = -1
        br_cnt = n + 1
        dead = False
        for i in range(m):
            r = rows[i]
            if (r & chosen) != _ZERO:
                continue
            w = r & avail
            if w == _ZERO:
                dead = True
                break
            c = popcount(w)
            if c < br_cnt:
                br_cnt = c
                br = i
            if (w & packed) == _ZERO:
                packed |= w
                lb += 1
        if dead:
            continue
        if br < 0:
            best = size
            best_mask = chosen
            continue
        if size + lb >= best:
            continue
        w = rows[br] & avail
        nv = 0
        for v in range(n):
            if (w & (_ONE << np.uint64(v))) != _ZERO:
                verts[nv] = v
                nv += 1
        # push largest first so the smallest index is explored first
        for k in range(nv - 1, -1, -1):
            prefix = _ZERO
            for t in range(k):
                prefix |= _ONE << np.uint64(verts[t])
            st_chosen[top] = chosen | (_ONE << np.uint64(verts[k]))
            st_excl[top] = excl | prefix
            top += 1
    if best < ub:
        return best, best_mask, nodes
    return -1, _ZERO, nodes


@njit(cache=True)
def _distinguishes_all(dist, combo, s, root):
    n = dist.shape[0]
    for a in range(n):
        for b in range(a + 1, n):
            ok = root >= 0 and dist[a, root] != dist[b, root]
            t = 0
            while not ok and t < s:
                w = combo[t]
                if dist[a, w] != dist[b, w]:
                    ok = True
                t += 1
            if not ok:
                return False
    return True


@njit(cache=True)
def brute_force_min(dist, cands, root):
    k = cands.shape[0]
    combo = np.empty(k, dtype=np.int64)
    idx = np.empty(k, dtype=np.int64)
    for s in range(k + 1):
        for t in range(s):
            idx[t] = t
        while True:
            for t in range(s):
                combo[t] = cands[idx[t]]
            if _distinguishes_all(dist, combo, s, root):
                mask = _ZERO
                for t in range(s):
                    mask |= _ONE << np.uint64(combo[t])
                return s, mask
            # next combination in lexicographic order
            t = s - 1
            while t >= 0 and idx[t] == k - s + t:
                t -= 1
            if t < 0:
                break
            idx[t] += 1
            for q in range(t + 1, s):
                idx[q] = idx[q - 1] + 1
    return -1, _ZERO
