"""Time the numba kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

The first numba call per kernel includes JIT compilation (or a cache load);
it is reported separately and excluded from the steady-state numbers.
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from metricdim import _accel, kernels
from metricdim.exact import build_full_system
from metricdim.graph import all_pairs_distances, random_connected_graph


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def workloads():
    g64 = random_connected_graph(64, Fraction(1, 10), 7)
    indptr, indices = g64.csr()
    d64 = all_pairs_distances(g64).entries

    g32 = random_connected_graph(32, Fraction(1, 2), 1)
    raw = build_full_system(all_pairs_distances(g32)).restricted_rows()
    rows = kernels.dominance_reduce(raw)
    allowed = (1 << 32) - 1
    ub = kernels.greedy_cover(rows, allowed, 32).bit_count() + 1

    g14 = random_connected_graph(14, Fraction(1, 5), 3)
    d14 = all_pairs_distances(g14).entries
    cands = list(range(14))

    return {
        "bfs, 64 vertices": lambda b: kernels.bfs_distances(64, indptr, indices, backend=b),
        "witness masks, 64 vertices": lambda b: kernels.witness_masks(d64, backend=b),
        "dominance reduce, 32 vertices": lambda b: kernels.dominance_reduce(raw, b),
        "cover search, 32 vertices": lambda b: kernels.cover_search(rows, allowed, ub, 32, b),
        "brute force, 14 vertices": lambda b: kernels.brute_force_min(d14, cands, -1, b),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'kernel':32s} {'first numba':>12s} {'numba':>10s} {'python':>10s} {'speedup':>8s}")
    for name, fn in workloads().items():
        t = time.perf_counter()
        a = fn("numba")
        first = time.perf_counter() - t
        assert a == fn("python") if not hasattr(a, "shape") else (a == fn("python")).all()
        nb = _best(lambda: fn("numba"), args.repeat)
        py = _best(lambda: fn("python"), args.repeat)
        print(f"{name:32s} {first * 1e3:10.2f}ms {nb * 1e3:8.2f}ms {py * 1e3:8.2f}ms {py / nb:7.1f}x")


if __name__ == "__main__":
    main()
