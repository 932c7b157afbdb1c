"""Pure Python / numpy counterparts of the numba kernels.

Vertex sets are plain Python ints here; the dispatcher in ``kernels`` converts.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np


def bfs_distances(order: int, indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    adj = np.zeros((order, order), dtype=np.int64)
    for v in range(order):
        adj[v, indices[indptr[v]:indptr[v + 1]]] = 1
    dist = np.full((order, order), -1, dtype=np.int32)
    reached = np.eye(order, dtype=bool)
    frontier = reached.copy()
    dist[reached] = 0
    step = 0
    while frontier.any():
        step += 1
        nxt = ((frontier.astype(np.int64) @ adj) > 0) & ~reached
        dist[nxt] = step
        reached |= nxt
        frontier = nxt
    return dist


def witness_masks(dist: np.ndarray) -> np.ndarray:
    n = dist.shape[0]
    ia, ib = np.triu_indices(n, 1)
    weights = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    neq = dist[ia] != dist[ib]
    return np.bitwise_or.reduce(np.where(neq, weights, np.uint64(0)), axis=1).astype(np.uint64)


def dominance_keep(rows: list[int]) -> list[bool]:
    kept: list[int] = []
    keep = []
    for r in rows:
        if any(k & r == k for k in kept):
            keep.append(False)
        else:
            kept.append(r)
            keep.append(True)
    return keep


def greedy_cover(rows: list[int], allowed: int, n: int) -> tuple[int, bool]:
    uncovered = list(rows)
    chosen = 0
    while uncovered:
        best_v, best_hits = -1, 0
        for v in range(n):
            bit = 1 << v
            if not allowed & bit or chosen & bit:
                continue
            hits = sum(1 for r in uncovered if r & bit)
            if hits > best_hits:
                best_v, best_hits = v, hits
        if best_v < 0:
            return 0, False
        chosen |= 1 << best_v
        uncovered = [r for r in uncovered if not r & chosen]
    return chosen, True


def cover_search(rows: list[int], allowed: int, ub: int, n: int) -> tuple[int, int, int]:
    best, best_mask, nodes = ub, 0, 0
    stack = [(0, 0)]
    while stack:
        chosen, excl = stack.pop()
        nodes += 1
        size = chosen.bit_count()
        if size >= best:
            continue
        avail = allowed & ~excl
        packed = lb = 0
        br_w, br_cnt = 0, n + 1
        dead = False
        for r in rows:
            if r & chosen:
                continue
            w = r & avail
            if not w:
                dead = True
                break
            c = w.bit_count()
            if c < br_cnt:
                br_w, br_cnt = w, c
            if not w & packed:
                packed |= w
                lb += 1
        if dead:
            continue
        if br_cnt > n:
            best, best_mask = size, chosen
            continue
        if size + lb >= best:
            continue
        verts = [v for v in range(n) if br_w >> v & 1]
        children = []
        prefix = 0
        for v in verts:
            children.append((chosen | 1 << v, excl | prefix))
            prefix |= 1 << v
        stack.extend(reversed(children))
    if best < ub:
        return best, best_mask, nodes
    return -1, 0, nodes


def brute_force_min(dist: np.ndarray, cands: list[int], root: int) -> tuple[int, int]:
    n = dist.shape[0]
    base = [root] if root >= 0 else []
    for s in range(len(cands) + 1):
        for combo in combinations(cands, s):
            cols = base + list(combo)
            if not cols:
                continue
            if len({tuple(dist[v, cols]) for v in range(n)}) == n:
                mask = 0
                for w in combo:
                    mask |= 1 << w
                return s, mask
    return -1, 0
