"""Independent oracles used by the tests; nothing here calls the solvers."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import networkx as nx

from metricdim.graph import Graph

# shared logs: every audited LP solve, and one line per acceptance criterion
CERTIFICATE_LOG: list[bool] = []
ACCEPTANCE_LINES: list[str] = []


def nx_graph(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return h


def nx_distances(g: Graph) -> list[list[int]]:
    sp = dict(nx.all_pairs_shortest_path_length(nx_graph(g)))
    return [[sp[a][b] for b in range(g.order)] for a in range(g.order)]


def naive_resolves(dist, w) -> bool:
    n = len(dist)
    return len({tuple(dist[v][x] for x in w) for v in range(n)}) == n


def naive_dim(g: Graph, root: int | None = None) -> int:
    """Smallest |W| with W (plus root) resolving, by networkx distances."""
    dist = nx_distances(g)
    base = [] if root is None else [root]
    cands = [v for v in range(g.order) if v != root]
    for k in range(len(cands) + 1):
        for w in combinations(cands, k):
            if base or w:
                if naive_resolves(dist, base + list(w)):
                    return k
    raise AssertionError("unreachable")


def certificate_holds(sys, res) -> bool:
    """Independent recheck of a FractionalResult against the unreduced system."""
    cands = sys.candidates.to_list()
    weights = res.witness.weights
    if any(not 0 <= w <= 1 for w in weights):
        return False
    if any(weights[v] != 0 for v in range(sys.order) if v not in sys.candidates):
        return False
    for wset in sys.witnesses:
        if sum((weights[v] for v in wset if v in sys.candidates), Fraction(0)) < 1:
            return False
    y = res.certificate
    z = res.bound_multipliers
    if len(y) != len(sys.witnesses) or len(z) != len(cands) or min(list(y) + list(z), default=0) < 0:
        return False
    for k, v in enumerate(cands):
        load = sum((y[i] for i, wset in enumerate(sys.witnesses) if v in wset), Fraction(0))
        if load - z[k] > 1:
            return False
    dual = sum(y, Fraction(0)) - sum(z, Fraction(0))
    return dual == res.value == sum(weights, Fraction(0))
