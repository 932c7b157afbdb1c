"""Fractional (rooted) metric dimension as an exact rational LP."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import Infeasible
from .exact import PairConstraintSystem, build_full_system, build_rooted_system
from .graph import Graph, RootedGraph, all_pairs_distances
from .rational_lp import LPSolution, check_certificate, rational_lp_solve


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class WeightFunction:
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if any(not 0 <= w <= 1 for w in self.weights):
            raise ValueError("weights must lie in [0, 1]")

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def of(self, mask: int) -> Fraction:
        """Weight g(W) of the vertex set given as a bitmask."""
        return sum((w for v, w in enumerate(self.weights) if mask >> v & 1), Fraction(0))

    def __getitem__(self, v: int) -> Fraction:
        return self.weights[v]


@dataclass(frozen=True)
class FractionalResult:
    value: Fraction
    witness: WeightFunction
    certificate: tuple[Fraction, ...]  # one multiplier per row of the system
    bound_multipliers: tuple[Fraction, ...]  # one per candidate vertex, in index order
    verified: bool
    vacuous: bool = False  # no constraint rows at all (end-rooted path)


def _verify(sys: PairConstraintSystem, res_x: dict[int, Fraction], y: list[Fraction], z: dict[int, Fraction], value):
    cols = sys.candidates.to_list()
    rows = sys.matrix()
    x = [res_x.get(v, Fraction(0)) for v in cols]
    sol = LPSolution(value, tuple(x), tuple(y), tuple(z.get(v, Fraction(0)) for v in cols), 0)
    return check_certificate(rows, [1] * len(rows), [1] * len(cols), [1] * len(cols), sol)


def fractional_dimension(sys: PairConstraintSystem, reduce: bool = True) -> FractionalResult:
    """Minimum total weight on candidates with g(R) >= 1 on every row."""
    n = sys.order
    if not sys.feasible:
        raise Infeasible("some constraint row has no candidate witness")
    masks = sys.restricted_rows()
    if not masks:
        zero = WeightFunction(tuple(Fraction(0) for _ in range(n)))
        z = tuple(Fraction(0) for _ in sys.candidates)
        ok = _verify(sys, {}, [], {}, Fraction(0))
        return FractionalResult(Fraction(0), zero, (), z, ok, vacuous=True)
    rows = kernels.dominance_reduce(masks) if reduce else list(dict.fromkeys(masks))
    useful = 0
    for r in rows:
        useful |= r
    cols = [v for v in range(n) if useful >> v & 1]
    matrix = [[(r >> v) & 1 for v in cols] for r in rows]
    sol = rational_lp_solve(matrix, [1] * len(cols), [1] * len(cols))

    x = {v: sol.x[k] for k, v in enumerate(cols)}
    z = {v: sol.bound_duals[k] for k, v in enumerate(cols)}
    # each reduced row's multiplier goes to the first original row with that mask
    first = {}
    for i, m in enumerate(masks):
        first.setdefault(m, i)
    y = [Fraction(0)] * len(masks)
    for k, r in enumerate(rows):
        y[first[r]] = sol.row_duals[k]
    ok = _verify(sys, x, y, z, sol.value)
    if not ok:
        raise AssertionError("dual certificate failed on the unreduced system")
    weights = WeightFunction(tuple(x.get(v, Fraction(0)) for v in range(n)))
    zc = tuple(z.get(v, Fraction(0)) for v in sys.candidates)
    return FractionalResult(sol.value, weights, tuple(y), zc, ok)


def fractional_metric_dimension(g: Graph) -> FractionalResult:
    return fractional_dimension(build_full_system(all_pairs_distances(g)))


def fractional_rooted_metric_dimension(rg: RootedGraph) -> FractionalResult:
    """LP value over the rows equidistant from the root.

    For a path rooted at an end there are no such rows and the value is 0;
    ``vacuous`` flags that case.
    """
    return fractional_dimension(build_rooted_system(rg, all_pairs_distances(rg.graph)))
