"""Exact metric dimension and rooted metric dimension.

Both reduce to a hitting-set problem over the pair constraint rows: pick the
fewest candidate vertices so that every row's witness set is hit.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import Infeasible
from .graph import DistanceMatrix, Graph, RootedGraph, VertexSet, all_pairs_distances


@dataclass(frozen=True)
class PairConstraintSystem:
    """Rows are vertex pairs; each row must be hit by a chosen candidate.

    For the rooted system the rows are the pairs equidistant from the root and
    the candidates exclude the root, so ``matrix()`` is the 0/1 matrix with
    one row per such pair and one column per non-root vertex.
    """

    order: int
    pairs: tuple[tuple[int, int], ...]
    witnesses: tuple[VertexSet, ...]
    candidates: VertexSet
    root: int | None = None

    @property
    def feasible(self) -> bool:
        c = self.candidates.mask
        return all(w.mask & c for w in self.witnesses)

    def restricted_rows(self) -> list[int]:
        c = self.candidates.mask
        return [w.mask & c for w in self.witnesses]

    def matrix(self) -> list[list[int]]:
        cols = self.candidates.to_list()
        return [[(w.mask >> v) & 1 for v in cols] for w in self.witnesses]

    def is_satisfied_by(self, chosen: VertexSet | int) -> bool:
        mask = chosen.mask if isinstance(chosen, VertexSet) else chosen
        return all(w.mask & mask for w in self.witnesses)


@dataclass(frozen=True)
class DimensionResult:
    value: int
    basis: VertexSet
    node_count: int

    def __post_init__(self):
        if self.basis.cardinality != self.value:
            raise ValueError("basis cardinality must equal value")


def build_full_system(dm: DistanceMatrix) -> PairConstraintSystem:
    n = dm.order
    witnesses = tuple(VertexSet(m, n) for m in dm.pair_masks)
    return PairConstraintSystem(n, tuple(dm.pairs), witnesses, VertexSet((1 << n) - 1, n))


def build_rooted_system(rg: RootedGraph, dm: DistanceMatrix | None = None) -> PairConstraintSystem:
    if dm is None:
        dm = rg.graph.distances
    n, u = dm.order, rg.root
    pairs, witnesses = [], []
    for (a, b), m in zip(dm.pairs, dm.pair_masks):
        if dm[a, u] == dm[b, u]:
            pairs.append((a, b))
            witnesses.append(VertexSet(m, n))
    cands = VertexSet(((1 << n) - 1) & ~(1 << u), n)
    return PairConstraintSystem(n, tuple(pairs), tuple(witnesses), cands, root=u)


def _lex_min_cover(rows: list[int], allowed: int, k: int, n: int) -> tuple[int, int]:
    """Lexicographically smallest hitting set of size exactly k (k is optimal)."""
    chosen, last, nodes = 0, -1, 0
    remaining = rows
    for slot in range(k):
        need = k - slot - 1
        for v in range(last + 1, n):
            if not allowed >> v & 1:
                continue
            rest = [r for r in remaining if not r >> v & 1]
            later = allowed & ~((1 << (v + 1)) - 1)
            if not rest:
                ok = True
            elif need == 0 or any(not r & later for r in rest):
                ok = False
            else:
                size, _, cnt = kernels.cover_search(rest, later, need + 1, n)
                nodes += cnt
                ok = size >= 0
            if ok:
                chosen |= 1 << v
                last = v
                remaining = rest
                break
        else:
            raise AssertionError("lexicographic basis extraction lost feasibility")
    return chosen, nodes


def solve_min_cover(sys: PairConstraintSystem) -> DimensionResult:
    n = sys.order
    if not sys.feasible:
        raise Infeasible("some constraint row has no candidate witness")
    rows = kernels.dominance_reduce(sys.restricted_rows())
    if not rows:
        return DimensionResult(0, VertexSet(0, n), 0)
    allowed = sys.candidates.mask
    useful = 0
    for r in rows:
        useful |= r
    allowed &= useful
    greedy = kernels.greedy_cover(rows, allowed, n)
    if greedy is None:  # pragma: no cover - excluded by the feasibility check
        raise Infeasible("greedy cover failed")
    k = greedy.bit_count()
    size, _, nodes = kernels.cover_search(rows, allowed, k, n)
    if size >= 0:
        k = size
    basis, extra = _lex_min_cover(rows, allowed, k, n)
    if not sys.is_satisfied_by(basis) or basis.bit_count() != k:
        raise AssertionError("solver returned a basis that violates a constraint row")
    return DimensionResult(k, VertexSet(basis, n), nodes + extra)


def metric_dimension(g: Graph) -> DimensionResult:
    return solve_min_cover(build_full_system(all_pairs_distances(g)))


def rooted_metric_dimension(rg: RootedGraph) -> DimensionResult:
    return solve_min_cover(build_rooted_system(rg, all_pairs_distances(rg.graph)))


def brute_force_basis(g_or_rg: Graph | RootedGraph, rooted: bool = False) -> VertexSet:
    """Lexicographically first minimum (rooted) resolving set by plain enumeration.

    Checks distance vectors directly; shares nothing with the R-set machinery.
    """
    if rooted:
        if not isinstance(g_or_rg, RootedGraph):
            raise TypeError("rooted brute force needs a RootedGraph")
        g, root = g_or_rg.graph, g_or_rg.root
    else:
        g = g_or_rg.graph if isinstance(g_or_rg, RootedGraph) else g_or_rg
        root = -1
    dist = all_pairs_distances(g).entries
    cands = [v for v in range(g.order) if v != root]
    size, mask = kernels.brute_force_min(dist, cands, root)
    if size < 0:  # pragma: no cover - V(G) always resolves
        raise Infeasible("no resolving set found")
    return VertexSet(mask, g.order)


def brute_force_dimension(g_or_rg: Graph | RootedGraph, rooted: bool = False) -> int:
    return brute_force_basis(g_or_rg, rooted).cardinality
