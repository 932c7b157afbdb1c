"""Hierarchical products of rooted graphs.

For ``outer = G2^{u2}`` and ``inner = G1^{u1}`` the product vertex ``x2x1`` is
encoded as ``x2 * |V(G1)| + x1``, so each copy of the inner graph occupies a
contiguous block of indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .errors import EqualVertices, IndexOutOfRange, OrderOverflow, SizeOutOfRange
from .graph import MAX_ORDER, Graph, RootedGraph, VertexSet, complete, resolving_pair_set


@dataclass(frozen=True)
class ProductGraph:
    result: RootedGraph
    outer: RootedGraph
    inner: RootedGraph

    @property
    def graph(self) -> Graph:
        return self.result.graph

    def index(self, x2: int, x1: int) -> int:
        n1 = self.inner.order
        if not (0 <= x2 < self.outer.order and 0 <= x1 < n1):
            raise IndexOutOfRange(f"({x2},{x1}) is not a product vertex")
        return x2 * n1 + x1

    def split(self, a: int) -> tuple[int, int]:
        if not 0 <= a < self.result.order:
            raise IndexOutOfRange(f"product vertex {a} out of range")
        return divmod(a, self.inner.order)


def product_edges(outer: RootedGraph, inner: RootedGraph) -> list[tuple[int, int]]:
    n1, u1 = inner.order, inner.root
    edges = [(x2 * n1 + a, x2 * n1 + b) for x2 in range(outer.order) for a, b in inner.graph.edges]
    edges += [(a * n1 + u1, b * n1 + u1) for a, b in outer.graph.edges]
    return edges


def hierarchical_product(outer: RootedGraph, inner: RootedGraph) -> ProductGraph:
    outer.graph.validate()
    inner.graph.validate()
    n = outer.order * inner.order
    if n > MAX_ORDER:
        raise OrderOverflow(f"product order {n} exceeds the {MAX_ORDER}-vertex cap")
    g = Graph.from_edges(n, product_edges(outer, inner)).validate()
    root = outer.root * inner.order + inner.root
    return ProductGraph(RootedGraph(g, root), outer, inner)


def product_distance(p: ProductGraph, a: int, b: int) -> int:
    """Distance in the product read off the factor distances."""
    x2, x1 = p.split(a)
    y2, y1 = p.split(b)
    d1 = p.inner.graph.distances
    if x2 == y2:
        return d1[x1, y1]
    u1 = p.inner.root
    return p.outer.graph.distances[x2, y2] + d1[x1, u1] + d1[y1, u1]


def product_resolving_pair_set(p: ProductGraph, a: int, b: int) -> VertexSet:
    x2, x1 = p.split(a)
    y2, y1 = p.split(b)
    if a == b:
        raise EqualVertices(f"pair ({a},{b}) is not a pair of distinct vertices")
    n = p.result.order
    if x2 != y2:
        return resolving_pair_set(p.graph.distances, a, b)
    n1 = p.inner.order
    inner_r = resolving_pair_set(p.inner.graph.distances, x1, y1)
    column = inner_r.mask << (x2 * n1)
    if p.inner.root not in inner_r:
        return VertexSet(column, n)
    block = ((1 << n1) - 1) << (x2 * n1)
    # everything outside the x2 block, plus the x2 copy of R_G1{x1, y1}
    return VertexSet(((1 << n) - 1) & ~block | column, n)


def iterated_product(factors: Sequence[RootedGraph]) -> RootedGraph:
    if not factors:
        raise SizeOutOfRange("need at least one factor")
    total = 1
    for f in factors:
        total *= f.order
    if total > MAX_ORDER:
        raise OrderOverflow(f"product order {total} exceeds the {MAX_ORDER}-vertex cap")
    return reduce(lambda acc, f: hierarchical_product(acc, f).result, factors[1:], factors[0])


def binomial_tree(n: int) -> RootedGraph:
    """T_n: the n-fold hierarchical product of K_2 rooted at 0."""
    if not 1 <= n <= 6:
        raise SizeOutOfRange(f"binomial tree needs 1 <= n <= 6, got {n}")
    k2 = RootedGraph(complete(2), 0)
    return iterated_product([k2] * n)
