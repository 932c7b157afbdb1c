"""Verifiers that recompute both sides of each product identity and inequality.

Every check is a named function in ``CHECKS`` taking a JSON-friendly instance
and returning an ``Outcome``. A failure in a report stores the check name and
the instance, so ``replay(failure)`` reruns exactly that check in isolation.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .errors import HypothesisViolated, SizeOutOfRange
from .exact import metric_dimension, rooted_metric_dimension
from .fractional import (
    fractional_metric_dimension,
    fractional_rooted_metric_dimension,
    format_rational,
)
from .graph import (
    MAX_ORDER,
    Graph,
    RootedGraph,
    all_pairs_distances,
    build_graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty_graph,
    is_end_rooted_path,
    join,
    path,
    random_connected_graph,
)
from .hproduct import binomial_tree, hierarchical_product, product_distance, product_resolving_pair_set
from .iso import connected_graphs, is_isomorphic

FRACTIONAL_READING_NOTE = (
    "thm3.3 checks the fractional identity dim_f(G2 x G1) = |V(G2)| * rdim_f(G1); "
    "the integer identity dim(G2 x G1) = |V(G2)| * rdim(G1) is thm2.6"
)


@dataclass
class Outcome:
    ok: bool
    expected: object
    actual: object
    checks: int = 1


@dataclass
class VerificationReport:
    statement_id: str
    instances_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    skipped: int = 0
    notes: list[str] = field(default_factory=list)
    children: list["VerificationReport"] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, check: str, instance: dict, outcome: Outcome) -> None:
        self.instances_checked += outcome.checks
        if not outcome.ok:
            self.failures.append(
                {"check": check, "instance": instance, "expected": outcome.expected, "actual": outcome.actual}
            )

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "statement_id": self.statement_id,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed * 1000) if timing else None,
        }
        if not timing:
            del out["elapsed_ms"]
        if self.skipped:
            out["skipped"] = self.skipped
        if self.notes:
            out["notes"] = self.notes
        if self.children:
            out["reports"] = [c.to_json(timing) for c in self.children]
        return out


def merge(statement_id: str, reports: list[VerificationReport]) -> VerificationReport:
    reports = sorted(reports, key=lambda r: r.statement_id)
    out = VerificationReport(statement_id, children=reports)
    for r in reports:
        out.instances_checked += r.instances_checked
        out.failures.extend(r.failures)
        out.elapsed += r.elapsed
        out.skipped += r.skipped
    return out


# ---------------------------------------------------------------- instances


def encode_rooted(rg: RootedGraph) -> dict:
    return {"order": rg.order, "edges": [list(e) for e in rg.graph.edges], "root": rg.root}


def decode_rooted(d: dict) -> RootedGraph:
    return RootedGraph(build_graph(d["order"], d["edges"]), d["root"])


def _pair(outer: RootedGraph, inner: RootedGraph) -> dict:
    return {"outer": encode_rooted(outer), "inner": encode_rooted(inner)}


def _q(x) -> str | int:
    return format_rational(x) if isinstance(x, Fraction) else x


# The factor-side quantities go through these two hooks so a test can corrupt
# one side and watch the harness catch it.


def _factor_rdim(inner: RootedGraph) -> int:
    return rooted_metric_dimension(inner).value


def _factor_rdim_f(inner: RootedGraph) -> Fraction:
    return fractional_rooted_metric_dimension(inner).value


def is_path_graph(g: Graph) -> bool:
    return g.is_connected and g.size == g.order - 1 and max(map(len, g.adjacency)) <= 2


def all_minimum_bases(g: Graph, k: int) -> list[tuple[int, ...]]:
    """Every resolving set of size k, found from raw distance vectors."""
    dist = all_pairs_distances(g).entries
    out = []
    for w in combinations(range(g.order), k):
        cols = list(w)
        if len({tuple(dist[v, cols]) for v in range(g.order)}) == g.order:
            out.append(w)
    return out


# ---------------------------------------------------------------- checks


def check_product_dim(instance: dict) -> Outcome:
    outer, inner = decode_rooted(instance["outer"]), decode_rooted(instance["inner"])
    if is_end_rooted_path(inner):
        raise HypothesisViolated("inner factor is a path rooted at an end vertex")
    p = hierarchical_product(outer, inner)
    actual = metric_dimension(p.graph).value
    expected = outer.order * _factor_rdim(inner)
    return Outcome(actual == expected, expected, actual)


def check_product_dim_from_bases(instance: dict) -> Outcome:
    """dim of the product from dim(G1) and whether some metric basis of G1 contains u1."""
    outer, inner = decode_rooted(instance["outer"]), decode_rooted(instance["inner"])
    if is_path_graph(inner.graph):
        raise HypothesisViolated("inner factor is a path")
    k = metric_dimension(inner.graph).value
    contains = any(inner.root in b for b in all_minimum_bases(inner.graph, k))
    expected = outer.order * (k - 1 if contains else k)
    actual = metric_dimension(hierarchical_product(outer, inner).graph).value
    return Outcome(actual == expected, expected, actual)


def check_product_fdim(instance: dict) -> Outcome:
    outer, inner = decode_rooted(instance["outer"]), decode_rooted(instance["inner"])
    if is_end_rooted_path(inner):
        raise HypothesisViolated("inner factor is a path rooted at an end vertex")
    p = hierarchical_product(outer, inner)
    actual = fractional_metric_dimension(p.graph).value
    expected = outer.order * _factor_rdim_f(inner)
    return Outcome(actual == expected, _q(expected), _q(actual))


def check_lower_int(instance: dict) -> Outcome:
    outer, inner = decode_rooted(instance["outer"]), decode_rooted(instance["inner"])
    p = hierarchical_product(outer, inner)
    lhs = rooted_metric_dimension(p.result).value
    rhs = outer.order * _factor_rdim(inner)
    return Outcome(lhs >= rhs, f">= {rhs}", lhs)


def check_lower_frac(instance: dict) -> Outcome:
    outer, inner = decode_rooted(instance["outer"]), decode_rooted(instance["inner"])
    if is_end_rooted_path(inner):
        raise HypothesisViolated("inner factor is a path rooted at an end vertex")
    p = hierarchical_product(outer, inner)
    lhs = fractional_rooted_metric_dimension(p.result).value
    rhs = outer.order * _factor_rdim_f(inner)
    return Outcome(lhs >= rhs, f">= {_q(rhs)}", _q(lhs))


def check_distance_formula(instance: dict) -> Outcome:
    outer, inner = decode_rooted(instance["outer"]), decode_rooted(instance["inner"])
    p = hierarchical_product(outer, inner)
    bfs = all_pairs_distances(p.graph)
    n = p.result.order
    bad = [(a, b) for a in range(n) for b in range(a, n) if product_distance(p, a, b) != bfs[a, b]]
    return Outcome(not bad, 0, len(bad), checks=n * (n + 1) // 2)


def check_pair_sets(instance: dict) -> Outcome:
    """Closed-form R-sets for same-column pairs; hitting property otherwise."""
    outer, inner = decode_rooted(instance["outer"]), decode_rooted(instance["inner"])
    p = hierarchical_product(outer, inner)
    bfs = all_pairs_distances(p.graph)
    n, n1 = p.result.order, inner.order
    bad = 0
    for a, b in combinations(range(n), 2):
        x2, y2 = a // n1, b // n1
        truth = bfs.pair_masks[bfs.pair_index(a, b)]
        if x2 == y2:
            if product_resolving_pair_set(p, a, b).mask != truth:
                bad += 1
        else:
            for z in range(n1):
                if not (truth >> (x2 * n1 + z) & 1 or truth >> (y2 * n1 + z) & 1):
                    bad += 1
                    break
    return Outcome(bad == 0, 0, bad, checks=n * (n - 1) // 2)


def path_product(g: RootedGraph, n: int) -> Graph:
    """G^u x P_n^0; for n = 1 this is G itself."""
    if n == 1:
        return g.graph
    return hierarchical_product(g, RootedGraph(path(n), 0)).graph


def check_path_chain(instance: dict) -> Outcome:
    """Monotone-then-stable dimension along G x P_n plus both sandwich chains."""
    g = decode_rooted(instance["graph"])
    n_max = instance["n_max"]
    order = g.order
    if order * (n_max + 1) > MAX_ORDER:
        raise SizeOutOfRange("path product exceeds the vertex cap")
    d = all_pairs_distances(g.graph).diameter
    dims = {n: metric_dimension(path_product(g, n)).value for n in range(1, n_max + 2)}
    fdims = {n: fractional_metric_dimension(path_product(g, n)).value for n in range(1, n_max + 2)}
    dim_g = metric_dimension(g.graph).value
    fdim_g = fractional_metric_dimension(g.graph).value
    problems = []
    for n in range(1, n_max + 1):
        if n <= d - 1 and not dims[n] <= dims[n + 1]:
            problems.append(f"monotone n={n}")
        if n >= d and dims[n] != dims[n + 1]:
            problems.append(f"stable n={n}")
        if not dim_g <= dims[n] <= order - 1:
            problems.append(f"sandwich n={n}")
        if not fdim_g <= fdims[n] <= fdims[n + 1] <= Fraction(order, 2):
            problems.append(f"fractional chain n={n}")
    actual = {
        "diameter": d,
        "dim": [dims[n] for n in sorted(dims)],
        "dim_f": [_q(fdims[n]) for n in sorted(fdims)],
        "violations": problems,
    }
    return Outcome(not problems, "no violations", actual, checks=4 * n_max)


def check_path_family(instance: dict) -> Outcome:
    """Closed forms for K_m, P_m and C_m multiplied by P_n."""
    family, m, n, root = instance["family"], instance["m"], instance["n"], instance["root"]
    base = {"complete": complete, "path": path, "cycle": cycle}[family](m)
    g = path_product(RootedGraph(base, root), n)
    actual = {"dim": metric_dimension(g).value}
    expected = {"dim": m - 1 if family == "complete" else 2}
    if family == "complete":
        actual["dim_f"] = _q(fractional_metric_dimension(g).value)
        expected["dim_f"] = _q(Fraction(m, 2))
    return Outcome(actual == expected, expected, actual, checks=len(expected))


def check_binomial(instance: dict) -> Outcome:
    n = instance["n"]
    t = binomial_tree(n).graph
    expected = {"dim": 2 ** (n - 2), "dim_f": _q(Fraction(2 ** (n - 2)))}
    actual = {"dim": metric_dimension(t).value, "dim_f": _q(fractional_metric_dimension(t).value)}
    return Outcome(actual == expected, expected, actual, checks=2)


def codim_two_family(n: int) -> list[Graph]:
    """Every graph of order n >= 4 named in the dim = n-2 characterization."""
    out = []
    for s in range(1, n):
        out.append(complete_bipartite(s, n - s))
        if n - s >= 2:
            out.append(join(complete(s), empty_graph(n - s)))
        if n - s - 1 >= 1:
            out.append(join(complete(s), disjoint_union(complete(1), complete(n - s - 1))))
    return out


def check_small_graph(instance: dict) -> Outcome:
    """Extremal characterizations for one graph, every root included."""
    g = build_graph(instance["order"], instance["edges"])
    n = g.order
    dim = metric_dimension(g).value
    problems = []
    if not 1 <= dim <= n - 1:
        problems.append("1 <= dim <= n-1")
    if (dim == 1) != is_path_graph(g):
        problems.append("dim = 1 iff path")
    if (dim == n - 1) != (g.size == n * (n - 1) // 2):
        problems.append("dim = n-1 iff complete")
    if n >= 4:
        member = any(is_isomorphic(g, h) for h in codim_two_family(n))
        if (dim == n - 2) != member:
            problems.append("dim = n-2 iff family member")
    bases = all_minimum_bases(g, dim)
    is_complete = g.size == n * (n - 1) // 2
    is_star = g.size == n - 1 and max(map(len, g.adjacency)) == n - 1
    for u in range(n):
        rg = RootedGraph(g, u)
        r = rooted_metric_dimension(rg).value
        if not 0 <= r <= n - 2:
            problems.append(f"0 <= rdim <= n-2 at root {u}")
        if (r == 0) != is_end_rooted_path(rg):
            problems.append(f"rdim = 0 iff end-rooted path at root {u}")
        centre_star = is_star and g.degree(u) == n - 1
        if (r == n - 2) != (is_complete or centre_star):
            problems.append(f"rdim = n-2 iff complete or centre-rooted star at root {u}")
        want = dim - 1 if any(u in b for b in bases) else dim
        if r != want:
            problems.append(f"basis/root relation at root {u}")
    checks = 4 + 4 * n
    return Outcome(not problems, "no violations", {"dim": dim, "violations": problems}, checks=checks)


CHECKS: dict[str, Callable[[dict], Outcome]] = {
    "thm2.6": check_product_dim,
    "product-dim-bases": check_product_dim_from_bases,
    "thm3.3": check_product_fdim,
    "lower-bound-int": check_lower_int,
    "lower-bound-frac": check_lower_frac,
    "distance-formula": check_distance_formula,
    "pair-sets": check_pair_sets,
    "path-chain": check_path_chain,
    "path-family": check_path_family,
    "binomial": check_binomial,
    "smallgraph": check_small_graph,
}


def replay(failure: dict) -> Outcome:
    return CHECKS[failure["check"]](failure["instance"])


def _run(report: VerificationReport, check: str, instance: dict) -> None:
    report.record(check, instance, CHECKS[check](instance))


# ---------------------------------------------------------------- verifiers


def verify_product_dim(outer: RootedGraph, inner: RootedGraph) -> VerificationReport:
    if is_end_rooted_path(inner):
        raise HypothesisViolated("inner factor is a path rooted at an end vertex")
    t = time.perf_counter()
    rep = VerificationReport("thm2.6")
    _run(rep, "thm2.6", _pair(outer, inner))
    rep.elapsed = time.perf_counter() - t
    return rep


def verify_product_fdim(outer: RootedGraph, inner: RootedGraph) -> VerificationReport:
    if is_end_rooted_path(inner):
        raise HypothesisViolated("inner factor is a path rooted at an end vertex")
    t = time.perf_counter()
    rep = VerificationReport("thm3.3", notes=[FRACTIONAL_READING_NOTE])
    _run(rep, "thm3.3", _pair(outer, inner))
    rep.elapsed = time.perf_counter() - t
    return rep


def verify_lower_bounds(outer: RootedGraph, inner: RootedGraph) -> VerificationReport:
    t = time.perf_counter()
    rep = VerificationReport("lemmas")
    inst = _pair(outer, inner)
    _run(rep, "lower-bound-int", inst)
    if is_end_rooted_path(inner):
        rep.skipped += 1
    else:
        _run(rep, "lower-bound-frac", inst)
    rep.elapsed = time.perf_counter() - t
    return rep


def verify_path_product(g: RootedGraph, n_max: int) -> VerificationReport:
    t = time.perf_counter()
    rep = VerificationReport("paths")
    _run(rep, "path-chain", {"graph": encode_rooted(g), "n_max": n_max})
    rep.elapsed = time.perf_counter() - t
    return rep


def verify_path_families() -> VerificationReport:
    t = time.perf_counter()
    rep = VerificationReport("path-families")
    for m in range(2, 6):
        for n in range(1, 5):
            _run(rep, "path-family", {"family": "complete", "m": m, "n": n, "root": 0})
    for m in range(3, 6):
        for n in range(2, 5):
            for u in range(1, m - 1):
                _run(rep, "path-family", {"family": "path", "m": m, "n": n, "root": u})
            for u in range(m):
                _run(rep, "path-family", {"family": "cycle", "m": m, "n": n, "root": u})
    rep.elapsed = time.perf_counter() - t
    return rep


def verify_small_graph_characterizations(n: int) -> VerificationReport:
    if not 2 <= n <= 5:
        raise SizeOutOfRange(f"characterization sweep supports 2 <= n <= 5, got {n}")
    t = time.perf_counter()
    rep = VerificationReport(f"smallgraphs-{n}")
    for g in connected_graphs(n):
        _run(rep, "smallgraph", {"order": g.order, "edges": [list(e) for e in g.edges]})
    rep.elapsed = time.perf_counter() - t
    return rep


def verify_binomial_trees(n_max: int) -> VerificationReport:
    if not 2 <= n_max <= 5:
        raise SizeOutOfRange(f"binomial sweep supports 2 <= n_max <= 5, got {n_max}")
    t = time.perf_counter()
    rep = VerificationReport("binomial")
    for n in range(2, n_max + 1):
        _run(rep, "binomial", {"n": n})
    rep.elapsed = time.perf_counter() - t
    return rep


# ---------------------------------------------------------------- random draws

_PROBABILITIES = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 4))


def random_rooted_graph(rng: random.Random, min_order: int, max_order: int) -> RootedGraph:
    n = rng.randint(min_order, max_order)
    p = rng.choice(_PROBABILITIES)
    g = random_connected_graph(n, p, rng.getrandbits(32))
    return RootedGraph(g, rng.randrange(n))


def random_factor_pairs(
    seed: int, count: int, max_inner: int, max_outer: int, redraw_end_paths: bool
) -> list[tuple[RootedGraph, RootedGraph]]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        outer = random_rooted_graph(rng, 2, max_outer)
        inner = random_rooted_graph(rng, 2, max_inner)
        while redraw_end_paths and is_end_rooted_path(inner):
            inner = random_rooted_graph(rng, 2, max_inner)
        if outer.order * inner.order <= MAX_ORDER:
            out.append((outer, inner))
    return out


def verify_product_dim_random(seed: int, trials: int, max_inner: int = 6, max_outer: int = 4) -> VerificationReport:
    t = time.perf_counter()
    rep = VerificationReport("thm2.6")
    for outer, inner in random_factor_pairs(seed, trials, max_inner, max_outer, True):
        inst = _pair(outer, inner)
        _run(rep, "thm2.6", inst)
        if is_path_graph(inner.graph):
            rep.skipped += 1
        else:
            _run(rep, "product-dim-bases", inst)
    rep.elapsed = time.perf_counter() - t
    return rep


def verify_product_fdim_random(seed: int, trials: int, max_inner: int = 6, max_outer: int = 4) -> VerificationReport:
    t = time.perf_counter()
    rep = VerificationReport("thm3.3", notes=[FRACTIONAL_READING_NOTE])
    for outer, inner in random_factor_pairs(seed, trials, max_inner, max_outer, True):
        _run(rep, "thm3.3", _pair(outer, inner))
    rep.elapsed = time.perf_counter() - t
    return rep


def verify_lemmas_random(seed: int, trials: int, max_inner: int = 6, max_outer: int = 4) -> VerificationReport:
    """Rooted lower bounds, the distance formula and the pair-set structure on random products."""
    t = time.perf_counter()
    rep = VerificationReport("lemmas")
    for outer, inner in random_factor_pairs(seed, trials, max_inner, max_outer, False):
        inst = _pair(outer, inner)
        _run(rep, "distance-formula", inst)
        _run(rep, "pair-sets", inst)
        _run(rep, "lower-bound-int", inst)
        if is_end_rooted_path(inner):
            rep.skipped += 1
        else:
            _run(rep, "lower-bound-frac", inst)
    rep.elapsed = time.perf_counter() - t
    return rep


def verify_paths_random(seed: int, trials: int, max_order: int = 6) -> VerificationReport:
    t = time.perf_counter()
    rep = VerificationReport("paths")
    rng = random.Random(seed)
    for _ in range(trials):
        g = random_rooted_graph(rng, 2, max_order)
        d = all_pairs_distances(g.graph).diameter
        n_max = min(d + 2, MAX_ORDER // g.order - 1)
        _run(rep, "path-chain", {"graph": encode_rooted(g), "n_max": n_max})
    rep.elapsed = time.perf_counter() - t
    return merge("paths", [rep, verify_path_families()])


def verify_randomized_suite(seed: int, trials: int, max_inner_order: int = 6, max_outer_order: int = 4) -> VerificationReport:
    """Both product identities, the lower bounds and the product structure checks on ``trials`` seeded draws each."""
    if trials == 0:
        return VerificationReport("random-suite")
    subs = [
        verify_product_dim_random(seed, trials, max_inner_order, max_outer_order),
        verify_product_fdim_random(seed, trials, max_inner_order, max_outer_order),
        verify_lemmas_random(seed, trials, max_inner_order, max_outer_order),
    ]
    rep = merge("random-suite", subs)
    rep.notes.append(FRACTIONAL_READING_NOTE)
    return rep


STATEMENTS = ("thm2.6", "thm3.3", "lemmas", "paths", "smallgraphs", "binomial", "all")


def run_statement(
    statement: str, seed: int = 42, trials: int = 50, max_inner: int = 6, max_outer: int = 4
) -> VerificationReport:
    if statement == "thm2.6":
        return verify_product_dim_random(seed, trials, max_inner, max_outer)
    if statement == "thm3.3":
        return verify_product_fdim_random(seed, trials, max_inner, max_outer)
    if statement == "lemmas":
        return verify_lemmas_random(seed, trials, max_inner, max_outer)
    if statement == "paths":
        return verify_paths_random(seed, min(trials, 20))
    if statement == "smallgraphs":
        return merge("smallgraphs", [verify_small_graph_characterizations(n) for n in range(2, 6)])
    if statement == "binomial":
        return verify_binomial_trees(5)
    if statement == "all":
        subs = [run_statement(s, seed, trials, max_inner, max_outer) for s in STATEMENTS[:-1]]
        rep = merge("all", subs)
        rep.notes.append(FRACTIONAL_READING_NOTE)
        return rep
    raise ValueError(f"unknown statement {statement!r}; choose from {', '.join(STATEMENTS)}")
