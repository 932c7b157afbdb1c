"""Exact metric dimension, rooted metric dimension and their fractional
versions, with hierarchical graph products and a verification harness."""

from .exact import (
    DimensionResult,
    PairConstraintSystem,
    brute_force_dimension,
    build_full_system,
    build_rooted_system,
    metric_dimension,
    rooted_metric_dimension,
    solve_min_cover,
)
from .fractional import (
    FractionalResult,
    WeightFunction,
    fractional_dimension,
    fractional_metric_dimension,
    fractional_rooted_metric_dimension,
)
from .graph import (
    DistanceMatrix,
    Graph,
    RootedGraph,
    VertexSet,
    all_pairs_distances,
    build_graph,
    complete,
    complete_bipartite,
    cycle,
    is_end_rooted_path,
    is_resolving_set,
    path,
    random_connected_graph,
    resolving_pair_set,
    star,
)
from .hproduct import ProductGraph, binomial_tree, hierarchical_product, iterated_product
from .rational_lp import rational_lp_solve

__version__ = "0.1.0"
