"""Exact counting and bound certification for forests, connected spanning
subgraphs, acyclic orientations and spanning trees of finite multigraphs."""

from .graph_core import (
    GirthReport,
    MultiGraph,
    SignedLift,
    cross_edge_cover,
    disjoint_union,
    expand_lift,
    girth,
    named_graph,
    parse_edge_list,
    parse_graph6,
    random_girth_tower,
)
from .exact_count import (
    IntPolynomial,
    chromatic_polynomial,
    count_acyclic_orientations,
    count_broken_cycle_free,
    count_connected_brute,
    count_connected_dc,
    count_connected_frontier,
    count_forests_brute,
    count_forests_dc,
    count_forests_frontier,
    count_score_vectors,
    count_spanning_trees,
    count_weakly_induced_forests,
)
from .algebraic import (
    WalkMoments,
    det_exact,
    forest_weight_sum,
    laplacian,
    random_cluster_Z,
    tree_walk_moments,
)
from .bounds import (
    BoundReport,
    average_connected_bound,
    average_degree_bound,
    binomial_tail_bound,
    bound_suite,
    degree_product_bound,
    entropy,
    four_regular_rates,
    janson_connected_bound,
    kahale_schulman_bound,
    km_integrate,
    km_log_integral,
    optimize_split_bound,
    split_forest_bound,
)
from .conjecture_lab import (
    CorrelationReport,
    TowerTrace,
    correlation_equivalences,
    crossed_cover_identity_check,
    forest_ratio,
    girth_tower_experiment,
    negative_correlation_report,
    root_leaf_connection_probability,
    shattering_report,
    short_cycle_bound,
    two_cover_check,
)

__version__ = "0.1.0"
