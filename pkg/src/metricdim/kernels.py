"""Dispatch layer over the numba and pure-Python kernel implementations.

All public functions take and return Python ints for vertex masks so callers
never see the backend. ``backend=None`` follows the environment flag.
"""

from __future__ import annotations

import numpy as np

from . import _accel
from . import _kernels_py as _py

if _accel.HAVE_NUMBA:
    from . import _kernels_nb as _nb
else:  # pragma: no cover
    _nb = None


def _use_nb(backend: str | None) -> bool:
    if backend is None:
        return _accel.USE_NUMBA
    if backend == "numba":
        if _nb is None:  # pragma: no cover
            raise RuntimeError("numba backend requested but numba is not installed")
        return True
    if backend == "python":
        return False
    raise ValueError(f"unknown backend {backend!r}")


def bfs_distances(order: int, indptr: np.ndarray, indices: np.ndarray, backend: str | None = None) -> np.ndarray:
    if _use_nb(backend):
        return _nb.bfs_distances(order, indptr.astype(np.int64), indices.astype(np.int64))
    return _py.bfs_distances(order, indptr, indices)


def witness_masks(dist: np.ndarray, backend: str | None = None) -> list[int]:
    """R-set bitmask for every pair a < b, in ``np.triu_indices`` order."""
    if _use_nb(backend):
        out = _nb.witness_masks(np.ascontiguousarray(dist, dtype=np.int32))
    else:
        out = _py.witness_masks(dist)
    return [int(x) for x in out]


def _sorted_rows(rows: list[int]) -> list[int]:
    return sorted(rows, key=lambda r: (r.bit_count(), r))


def dominance_reduce(rows: list[int], backend: str | None = None) -> list[int]:
    """Drop every row that is a superset of another row (and duplicates).

    The survivors come back sorted by (popcount, mask).
    """
    rows = _sorted_rows(rows)
    if not rows:
        return rows
    if _use_nb(backend):
        keep = _nb.dominance_keep(np.array(rows, dtype=np.uint64))
    else:
        keep = _py.dominance_keep(rows)
    return [r for r, k in zip(rows, keep) if k]


def greedy_cover(rows: list[int], allowed: int, n: int, backend: str | None = None) -> int | None:
    if not rows:
        return 0
    if _use_nb(backend):
        mask, ok = _nb.greedy_cover(np.array(rows, dtype=np.uint64), np.uint64(allowed), n)
        mask = int(mask)
    else:
        mask, ok = _py.greedy_cover(rows, allowed, n)
    return mask if ok else None


def cover_search(rows: list[int], allowed: int, ub: int, n: int, backend: str | None = None) -> tuple[int, int, int]:
    """Smallest hitting set of ``rows`` inside ``allowed`` with size < ub.

    Returns ``(size, mask, nodes)``; ``size == -1`` if none exists.
    """
    rows = _sorted_rows(rows)
    if _use_nb(backend):
        size, mask, nodes = _nb.cover_search(np.array(rows, dtype=np.uint64), np.uint64(allowed), ub, n)
        return int(size), int(mask), int(nodes)
    return _py.cover_search(rows, allowed, ub, n)


def brute_force_min(dist: np.ndarray, cands: list[int], root: int = -1, backend: str | None = None) -> tuple[int, int]:
    """First W (by size, then lexicographic) such that W plus root resolves."""
    if _use_nb(backend):
        size, mask = _nb.brute_force_min(
            np.ascontiguousarray(dist, dtype=np.int32), np.array(cands, dtype=np.int64), root
        )
        return int(size), int(mask)
    return _py.brute_force_min(dist, list(cands), root)
