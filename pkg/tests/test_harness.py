from __future__ import annotations

import json

import pytest

from metricdim import harness
from metricdim.errors import HypothesisViolated, SizeOutOfRange
from metricdim.graph import RootedGraph, complete, cycle, path, star
from metricdim.harness import (
    decode_rooted,
    encode_rooted,
    merge,
    replay,
    run_statement,
    verify_binomial_trees,
    verify_lower_bounds,
    verify_path_product,
    verify_product_dim,
    verify_product_fdim,
    verify_randomized_suite,
    verify_small_graph_characterizations,
)
from metricdim.hproduct import binomial_tree
from metricdim.iso import canonical_form, connected_graphs, labelled_connected_graphs

K2 = RootedGraph(complete(2), 0)


def outcome(check, outer, inner):
    return harness.CHECKS[check]({"outer": encode_rooted(outer), "inner": encode_rooted(inner)})


def test_product_dim_examples():
    t2 = binomial_tree(2)
    o = outcome("thm2.6", K2, t2)
    assert o.ok and o.expected == o.actual == 2
    o = outcome("thm2.6", RootedGraph(complete(3), 0), RootedGraph(cycle(4), 0))
    assert o.ok and o.actual == 3
    rep = verify_product_dim(K2, t2)
    assert rep.passed and rep.instances_checked == 1


def test_hypothesis_gate():
    p4 = RootedGraph(path(4), 0)
    with pytest.raises(HypothesisViolated):
        verify_product_dim(K2, p4)
    with pytest.raises(HypothesisViolated):
        verify_product_fdim(K2, p4)
    # the integer lower bound has no such hypothesis
    rep = verify_lower_bounds(K2, K2)
    assert rep.passed and rep.skipped == 1


def test_product_fdim_examples():
    o = outcome("thm3.3", K2, binomial_tree(2))
    assert o.ok and o.actual == "2"
    o = outcome("thm3.3", K2, RootedGraph(complete(4), 0))
    assert o.ok and o.expected == o.actual == "3"
    o = outcome("thm3.3", RootedGraph(complete(3), 0), RootedGraph(complete(3), 0))
    assert o.ok and o.actual == "3"
    rep = verify_product_fdim(K2, RootedGraph(complete(4), 0))
    assert rep.passed and rep.notes == [harness.FRACTIONAL_READING_NOTE]


def test_lower_bound_examples():
    o = outcome("lower-bound-int", K2, K2)
    assert o.ok and o.actual == 1
    assert outcome("lower-bound-int", K2, RootedGraph(complete(3), 0)).ok
    o = outcome("lower-bound-frac", K2, RootedGraph(cycle(4), 0))
    assert o.ok and o.expected == ">= 2"


def test_path_product_examples():
    for g, n_max in [(RootedGraph(complete(4), 0), 4), (RootedGraph(path(3), 1), 3), (RootedGraph(cycle(5), 0), 3)]:
        rep = verify_path_product(g, n_max)
        assert rep.passed, rep.failures
    assert harness.path_product(RootedGraph(cycle(5), 0), 1) == cycle(5)


def test_small_graph_sweeps():
    for n in range(2, 6):
        rep = verify_small_graph_characterizations(n)
        assert rep.passed, rep.failures
        assert rep.instances_checked >= len(connected_graphs(n))
    for bad in (1, 6):
        with pytest.raises(SizeOutOfRange):
            verify_small_graph_characterizations(bad)


def test_codim_two_family_contains_star_but_not_c5():
    fam4 = harness.codim_two_family(4)
    assert any(canonical_form(g) == canonical_form(star(4)) for g in fam4)
    assert all(canonical_form(g) != canonical_form(cycle(5)) for g in harness.codim_two_family(5))


def test_binomial_sweep():
    rep = verify_binomial_trees(5)
    assert rep.passed and rep.instances_checked == 8  # dim and dim_f for n = 2..5
    for bad in (1, 6):
        with pytest.raises(SizeOutOfRange):
            verify_binomial_trees(bad)


def test_zero_trials_is_an_empty_pass():
    rep = verify_randomized_suite(7, 0, 6, 4)
    assert rep.passed and rep.instances_checked == 0 and rep.failures == []


def test_reports_are_deterministic():
    a = verify_randomized_suite(3, 8, 5, 3).to_json(timing=False)
    b = verify_randomized_suite(3, 8, 5, 3).to_json(timing=False)
    assert a == b
    assert json.loads(json.dumps(a)) == a
    assert "elapsed_ms" not in a and "elapsed_ms" in verify_randomized_suite(3, 1, 5, 3).to_json()


def test_random_suite_pinned_run():
    rep = verify_randomized_suite(42, 100, 6, 4)
    assert rep.passed, rep.failures[:3]
    assert {c.statement_id for c in rep.children} == {"thm2.6", "thm3.3", "lemmas"}


def test_corrupted_equality_gives_one_replayable_failure(monkeypatch):
    real = harness._factor_rdim
    c4 = RootedGraph(cycle(4), 0)

    def off_by_one(inner):
        return real(inner) + (inner == c4)

    monkeypatch.setattr(harness, "_factor_rdim", off_by_one)
    reports = [verify_product_dim(K2, inner) for inner in (binomial_tree(2), c4, RootedGraph(complete(4), 1))]
    rep = merge("thm2.6", reports)
    assert len(rep.failures) == 1
    fail = rep.failures[0]
    assert decode_rooted(fail["instance"]["inner"]) == c4
    again = replay(json.loads(json.dumps(fail)))
    assert not again.ok and (again.expected, again.actual) == (fail["expected"], fail["actual"])
    monkeypatch.setattr(harness, "_factor_rdim", real)
    assert replay(fail).ok


def test_rooted_encoding_round_trip():
    rg = RootedGraph(cycle(5), 3)
    assert decode_rooted(encode_rooted(rg)) == rg


def test_run_statement_names():
    assert set(harness.STATEMENTS) == {"thm2.6", "thm3.3", "lemmas", "paths", "smallgraphs", "binomial", "all"}
    rep = run_statement("binomial")
    assert rep.passed
    with pytest.raises(ValueError):
        run_statement("thm9.9")


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_isomorphism_classes_agree_with_labelled_enumeration(n):
    seen = {canonical_form(g) for g in labelled_connected_graphs(n)}
    assert seen == {canonical_form(g) for g in connected_graphs(n)}
    assert len(seen) == len(connected_graphs(n))
