"""Graphs, distances, resolving pair sets and the standard families.

Vertices are the integers ``0..n-1``. Graphs are immutable. A ``Graph`` may be
disconnected or of order 1 only as an intermediate (``join`` and
``disjoint_union`` operands); anything that computes distances demands a
connected graph of order at least 2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import (
    Disconnected,
    DuplicateEdge,
    EdgeListFormatError,
    EqualVertices,
    GraphError,
    IndexOutOfRange,
    OrderOverflow,
    SelfLoop,
    SizeOutOfRange,
    TrivialGraph,
)

MAX_ORDER = 64


@dataclass(frozen=True)
class VertexSet:
    """Subset of ``0..order-1`` stored as a bitmask."""

    mask: int
    order: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.order:
            raise IndexOutOfRange(f"mask {self.mask:#x} has bits outside 0..{self.order - 1}")

    @classmethod
    def of(cls, vertices: Iterable[int], order: int) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < order:
                raise IndexOutOfRange(f"vertex {v} out of range 0..{order - 1}")
            mask |= 1 << v
        return cls(mask, order)

    @property
    def cardinality(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.cardinality

    def __iter__(self) -> Iterator[int]:
        m, v = self.mask, 0
        while m:
            if m & 1:
                yield v
            m >>= 1
            v += 1

    def __contains__(self, v: object) -> bool:
        return isinstance(v, (int, np.integer)) and 0 <= v < self.order and bool(self.mask >> int(v) & 1)

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True, eq=True)
class Graph:
    order: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.order < 1:
            raise TrivialGraph("a graph needs at least one vertex")
        if self.order > MAX_ORDER:
            raise OrderOverflow(f"order {self.order} exceeds the {MAX_ORDER}-vertex cap")
        if len(self.adjacency) != self.order:
            raise GraphError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise DuplicateEdge(f"neighbour list of {v} is not strictly increasing")
            for w in nbrs:
                if w == v:
                    raise SelfLoop(f"self-loop at vertex {v}")
                if not 0 <= w < self.order:
                    raise IndexOutOfRange(f"neighbour {w} of {v} out of range")
                if v not in self.adjacency[w]:
                    raise GraphError(f"adjacency not symmetric on {{{v},{w}}}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a simple graph without requiring connectivity."""
        if order < 1:
            raise TrivialGraph(f"order {order} < 1")
        if order > MAX_ORDER:
            raise OrderOverflow(f"order {order} exceeds the {MAX_ORDER}-vertex cap")
        nbrs: list[set[int]] = [set() for _ in range(order)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < order and 0 <= v < order):
                raise IndexOutOfRange(f"edge ({u},{v}) has an endpoint outside 0..{order - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise DuplicateEdge(f"edge {{{u},{v}}} given twice")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(order, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v, nbrs in enumerate(self.adjacency) for w in nbrs if v < w]

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def validate(self) -> "Graph":
        """Raise unless this graph is nontrivial and connected."""
        if self.order < 2:
            raise TrivialGraph(f"order {self.order} < 2")
        if not self.is_connected:
            raise Disconnected("graph is not connected")
        return self

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.order + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter((w for a in self.adjacency for w in a), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return all_pairs_distances(self)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges})"


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.graph.order:
            raise IndexOutOfRange(f"root {self.root} out of range 0..{self.graph.order - 1}")

    @property
    def order(self) -> int:
        return self.graph.order


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    entries: np.ndarray
    diameter: int = field(init=False)

    def __post_init__(self):
        self.entries.setflags(write=False)
        object.__setattr__(self, "diameter", int(self.entries.max()))

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, ij) -> int:
        return int(self.entries[ij])

    @cached_property
    def pair_masks(self) -> list[int]:
        """R-set bitmask per unordered pair, ordered as ``pairs``."""
        return kernels.witness_masks(self.entries)

    @cached_property
    def pairs(self) -> list[tuple[int, int]]:
        ia, ib = np.triu_indices(self.order, 1)
        return list(zip(ia.tolist(), ib.tolist()))

    def pair_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        n = self.order
        return u * (2 * n - u - 1) // 2 + (v - u - 1)


def build_graph(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    if order < 2:
        raise TrivialGraph(f"order {order} < 2: graphs must be nontrivial")
    return Graph.from_edges(order, edges).validate()


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    g.validate()
    indptr, indices = g.csr()
    return DistanceMatrix(kernels.bfs_distances(g.order, indptr, indices))


def _check_vertex(dm: DistanceMatrix, v: int) -> None:
    if not 0 <= v < dm.order:
        raise IndexOutOfRange(f"vertex {v} out of range 0..{dm.order - 1}")


def resolving_pair_set(dm: DistanceMatrix, u: int, v: int) -> VertexSet:
    """Vertices w with d(u, w) != d(v, w)."""
    _check_vertex(dm, u)
    _check_vertex(dm, v)
    if u == v:
        raise EqualVertices(f"pair ({u},{v}) is not a pair of distinct vertices")
    return VertexSet(dm.pair_masks[dm.pair_index(u, v)], dm.order)


def _as_mask(w: VertexSet | Iterable[int], order: int) -> int:
    if isinstance(w, VertexSet):
        return w.mask
    return VertexSet.of(w, order).mask


def is_resolving_set(dm: DistanceMatrix, w: VertexSet | Iterable[int]) -> bool:
    mask = _as_mask(w, dm.order)
    return all(m & mask for m in dm.pair_masks)


def is_end_rooted_path(rg: RootedGraph) -> bool:
    g = rg.graph
    if g.size != g.order - 1 or not g.is_connected:
        return False
    return max(g.degree(v) for v in range(g.order)) <= 2 and g.degree(rg.root) == 1


# ---------------------------------------------------------------- families
#
# Canonical numbering:
#   path(n)                  0-1-...-(n-1)
#   cycle(n)                 i ~ i+1 (mod n)
#   complete(n)              all pairs
#   complete_bipartite(s,t)  parts {0..s-1} and {s..s+t-1}
#   star(n)                  centre 0, leaves 1..n-1 (so K_{1,n-1})
#   empty_graph(t)           t isolated vertices
#   join / disjoint_union    g1 keeps its labels, g2 is shifted by |V(g1)|


def path(n: int) -> Graph:
    if n < 2:
        raise SizeOutOfRange(f"path needs n >= 2, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise SizeOutOfRange(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise SizeOutOfRange(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise SizeOutOfRange(f"K_{{s,t}} needs s, t >= 1, got {s}, {t}")
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star(n: int) -> Graph:
    if n < 2:
        raise SizeOutOfRange(f"star needs order n >= 2, got {n}")
    return complete_bipartite(1, n - 1)


def empty_graph(t: int) -> Graph:
    if t < 1:
        raise SizeOutOfRange(f"empty graph needs t >= 1, got {t}")
    return Graph.from_edges(t, [])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    k = g1.order
    return Graph.from_edges(k + g2.order, g1.edges + [(a + k, b + k) for a, b in g2.edges])


def join(g1: Graph, g2: Graph) -> Graph:
    k = g1.order
    cross = [(a, k + b) for a in range(k) for b in range(g2.order)]
    return Graph.from_edges(k + g2.order, g1.edges + [(a + k, b + k) for a, b in g2.edges] + cross)


def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    # uniform over labelled trees via a random Pruefer sequence
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return edges


def random_connected_graph(n: int, edge_probability: Fraction | float, seed: int) -> Graph:
    """Uniform random spanning tree plus each other edge with the given probability."""
    if n < 2 or n > MAX_ORDER:
        raise SizeOutOfRange(f"n must lie in 2..{MAX_ORDER}, got {n}")
    p = Fraction(edge_probability)
    if not 0 < p <= 1:
        raise SizeOutOfRange(f"edge probability must lie in (0, 1], got {p}")
    rng = random.Random(seed)
    tree = _random_tree_edges(n, rng)
    present = set(tree)
    extra = []
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in present and rng.random() < p:
                extra.append((i, j))
    return build_graph(n, tree + extra)


# ---------------------------------------------------------------- edge lists


def parse_edge_list(text: str) -> tuple[Graph, int | None]:
    """Parse the ``n m`` edge-list format; returns the graph and an optional root.

    A comment line of the form ``# root R`` records a root vertex.
    """
    root = None
    data = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "root":
                try:
                    root = int(parts[1])
                except ValueError:
                    raise EdgeListFormatError(f"line {lineno}: bad root {parts[1]!r}") from None
            continue
        try:
            data.append((lineno, [int(x) for x in line.split()]))
        except ValueError:
            raise EdgeListFormatError(f"line {lineno}: expected integers, got {line!r}") from None
    if not data:
        raise EdgeListFormatError("empty edge list: missing 'n m' header")
    lineno, header = data[0]
    if len(header) != 2:
        raise EdgeListFormatError(f"line {lineno}: header must be 'n m'")
    n, m = header
    edges = data[1:]
    if len(edges) != m:
        raise EdgeListFormatError(f"header announces {m} edges, found {len(edges)}")
    for lineno, e in edges:
        if len(e) != 2:
            raise EdgeListFormatError(f"line {lineno}: edge must be 'u v'")
    g = build_graph(n, [e for _, e in edges])
    if root is not None and not 0 <= root < n:
        raise EdgeListFormatError(f"root {root} out of range 0..{n - 1}")
    return g, root


def format_edge_list(g: Graph, root: int | None = None) -> str:
    lines = []
    if root is not None:
        lines.append(f"# root {root}")
    edges = g.edges
    lines.append(f"{g.order} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
