from __future__ import annotations

import pytest
from hypothesis import given

from metricdim.errors import Infeasible
from metricdim.exact import (
    PairConstraintSystem,
    brute_force_basis,
    brute_force_dimension,
    build_full_system,
    build_rooted_system,
    metric_dimension,
    rooted_metric_dimension,
    solve_min_cover,
)
from metricdim.graph import (
    RootedGraph,
    VertexSet,
    all_pairs_distances,
    complete,
    complete_bipartite,
    cycle,
    is_resolving_set,
    path,
    star,
)
from metricdim.hproduct import binomial_tree
from oracles import naive_dim, naive_resolves, nx_distances
from strategies import connected_graphs, rooted_graphs


def rows_of(sys):
    return [(p, w.to_list()) for p, w in zip(sys.pairs, sys.witnesses)]


def test_full_system_examples():
    assert rows_of(build_full_system(all_pairs_distances(complete(3)))) == [
        ((0, 1), [0, 1]),
        ((0, 2), [0, 2]),
        ((1, 2), [1, 2]),
    ]
    assert rows_of(build_full_system(all_pairs_distances(path(2)))) == [((0, 1), [0, 1])]
    p3 = build_full_system(all_pairs_distances(path(3)))
    assert len(p3.pairs) == 3 and dict(rows_of(p3))[(0, 2)] == [0, 2]


def test_rooted_system_examples():
    for n in (2, 5, 7):
        sys = build_rooted_system(RootedGraph(path(n), 0))
        assert sys.pairs == ()
    k4 = build_rooted_system(RootedGraph(complete(4), 0))
    assert k4.pairs == ((1, 2), (1, 3), (2, 3)) and k4.candidates.to_list() == [1, 2, 3]
    c4 = build_rooted_system(RootedGraph(cycle(4), 0))
    assert rows_of(c4) == [((1, 3), [1, 3])]
    assert c4.matrix() == [[1, 0, 1]]


@given(rooted_graphs(max_order=8))
def test_rooted_rows_are_pairs_equidistant_from_root(rg):
    d = nx_distances(rg.graph)
    sys = build_rooted_system(rg)
    u = rg.root
    want = [(a, b) for a in range(rg.order) for b in range(a + 1, rg.order) if d[a][u] == d[b][u]]
    assert list(sys.pairs) == want
    assert u not in sys.candidates


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_paths_have_dimension_one(n):
    assert solve_min_cover(build_full_system(all_pairs_distances(path(n)))).value == 1


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_complete_graphs_have_dimension_n_minus_1(n):
    assert metric_dimension(complete(n)).value == n - 1


def test_dimension_examples():
    assert rooted_metric_dimension(RootedGraph(complete(5), 2)).value == 3
    assert metric_dimension(complete_bipartite(2, 3)).value == 3
    assert metric_dimension(cycle(6)).value == naive_dim(cycle(6)) == 2
    assert metric_dimension(star(5)).value == 3
    assert rooted_metric_dimension(RootedGraph(path(7), 0)).value == 0
    assert rooted_metric_dimension(RootedGraph(star(5), 0)).value == 3
    assert all(rooted_metric_dimension(RootedGraph(cycle(4), u)).value == 1 for u in range(4))


def test_brute_force_examples():
    assert brute_force_dimension(path(5)) == 1
    assert brute_force_dimension(complete(4)) == 3
    assert brute_force_dimension(binomial_tree(3).graph) == 2


def test_empty_system_gives_zero():
    r = rooted_metric_dimension(RootedGraph(path(4), 3))
    assert r.value == 0 and r.basis.to_list() == [] and r.node_count == 0


def test_infeasible_system_is_rejected():
    sys = PairConstraintSystem(3, ((0, 1),), (VertexSet(0b011, 3),), VertexSet(0b100, 3))
    with pytest.raises(Infeasible):
        solve_min_cover(sys)


@given(connected_graphs(max_order=9))
def test_solver_matches_networkx_enumeration(g):
    r = metric_dimension(g)
    assert r.value == naive_dim(g)
    assert naive_resolves(nx_distances(g), r.basis.to_list())


@given(rooted_graphs(max_order=9))
def test_rooted_solver_matches_enumeration_and_basis_is_rooted_resolving(rg):
    r = rooted_metric_dimension(rg)
    assert r.value == naive_dim(rg.graph, rg.root)
    assert is_resolving_set(all_pairs_distances(rg.graph), r.basis.to_list() + [rg.root])


@given(rooted_graphs(max_order=9))
def test_hitting_rooted_rows_iff_resolving_with_root(rg):
    sys = build_rooted_system(rg)
    dm = all_pairs_distances(rg.graph)
    others = [v for v in range(rg.order) if v != rg.root]
    for mask in range(0, 1 << len(others), max(1, (1 << len(others)) // 64)):
        w = [v for k, v in enumerate(others) if mask >> k & 1]
        assert sys.is_satisfied_by(VertexSet.of(w, rg.order)) == is_resolving_set(dm, w + [rg.root])


@given(connected_graphs(max_order=10))
def test_basis_is_lexicographically_first(g):
    # brute force scans subsets in lexicographic order, so its first hit is the lex-min basis
    assert metric_dimension(g).basis == brute_force_basis(g)


@given(rooted_graphs(max_order=10))
def test_rooted_and_plain_dimension_differ_by_at_most_one(rg):
    n = rg.order
    d = metric_dimension(rg.graph).value
    r = rooted_metric_dimension(rg).value
    assert r <= d <= r + 1
    assert 1 <= d <= n - 1 and 0 <= r <= n - 2


def test_dominance_reduction_preserves_the_optimum():
    from metricdim import kernels

    for n in range(3, 9):
        g = complete(n)
        sys = build_full_system(all_pairs_distances(g))
        rows = sys.restricted_rows()
        red = kernels.dominance_reduce(rows)
        assert len(red) <= len(rows)
        # every dropped row contains a surviving row
        assert all(any(k & r == k for k in red) for r in rows)


def test_result_is_deterministic():
    g = binomial_tree(4).graph
    a, b = metric_dimension(g), metric_dimension(g)
    assert a == b
