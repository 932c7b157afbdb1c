"""Brute-force isomorphism and enumeration of small connected graphs."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

from .errors import SizeOutOfRange
from .graph import Graph

MAX_ISO_ORDER = 8


def _degree_classes(g: Graph) -> list[list[int]]:
    by_deg: dict[int, list[int]] = {}
    for v in range(g.order):
        by_deg.setdefault(g.degree(v), []).append(v)
    return [by_deg[d] for d in sorted(by_deg)]


def canonical_form(g: Graph) -> tuple:
    """Isomorphism invariant that separates non-isomorphic graphs.

    Minimum sorted edge list over all relabellings that list vertices by
    nondecreasing degree.
    """
    if g.order > MAX_ISO_ORDER:
        raise SizeOutOfRange(f"brute-force isomorphism is capped at order {MAX_ISO_ORDER}")
    classes = _degree_classes(g)
    edges = g.edges
    best = None
    for parts in product(*(permutations(c) for c in classes)):
        order = [v for part in parts for v in part]
        label = [0] * g.order
        for new, old in enumerate(order):
            label[old] = new
        code = tuple(sorted((min(label[a], label[b]), max(label[a], label[b])) for a, b in edges))
        if best is None or code < best:
            best = code
    return (g.order, tuple(len(c) for c in classes), best)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.order != g2.order or g1.size != g2.size:
        return False
    if sorted(map(len, g1.adjacency)) != sorted(map(len, g2.adjacency)):
        return False
    return canonical_form(g1) == canonical_form(g2)


def labelled_connected_graphs(n: int):
    """Every connected labelled graph on n vertices (exponential; n <= 6)."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if bits >> k & 1])
        if g.is_connected:
            yield g


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs of order n.

    Every connected graph has a vertex whose removal keeps it connected, so
    adding a vertex with a nonempty neighbourhood to each class of order n-1
    reaches every class of order n.
    """
    if not 1 <= n <= MAX_ISO_ORDER:
        raise SizeOutOfRange(f"enumeration supports 1 <= n <= {MAX_ISO_ORDER}")
    if n == 1:
        return (Graph.from_edges(1, []),)
    seen: dict[tuple, Graph] = {}
    for h in connected_graphs(n - 1):
        base = h.edges
        for nbrs in range(1, 1 << (n - 1)):
            g = Graph.from_edges(n, base + [(v, n - 1) for v in range(n - 1) if nbrs >> v & 1])
            seen.setdefault(canonical_form(g), g)
    return tuple(seen[k] for k in sorted(seen))
