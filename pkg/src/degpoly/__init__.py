"""Exact arithmetic for degree partitions of graphs and hypergraphs.

The vertices of the polytope studied here are the degree partitions of
threshold graphs; the package optimizes linear functionals over them,
decides membership, enumerates faces, and recognizes hypergraph degree
sequences, cross-checking every fast route against a brute-force one.
"""

from .core import (
    IntSequence,
    Partition,
    Rational,
    RationalVector,
    as_rational_vector,
    check_partition,
    is_partition,
    is_weakly_decreasing,
    majorizes,
    prefix_sums,
    sort_decreasing,
)
from .hypergraph import (
    RGraph,
    UnitTransformation,
    apply_unit_transformation,
    brute_force_r_graphical,
    degree_sequence,
    enumerate_r_ideal_partitions,
    enumerate_r_ideals,
    format_hypergraph,
    is_r_graphical_partition,
    is_r_ideal,
    muirhead_chain,
    parse_hypergraph,
    r_subsets,
    realize_r_graph,
    relabel_rgraph,
    reverse_saturate,
)
from .optimize import (
    Certificate,
    PairCosts,
    brute_force_max_weight_ideals,
    brute_force_optimal_partition,
    certificate_step,
    lift_costs,
    max_weight_ideal,
    objective_value,
    optimal_threshold_partition,
    optimality_certificate,
)
from .polytope import (
    FacetInequality,
    FhmMembership,
    VolumeEstimate,
    affine_rank,
    apply_incidence,
    are_adjacent,
    count_edges,
    dominating_count,
    dominating_sum_identity,
    dp3_volume,
    ds3_volume_estimate,
    enumerate_degree_partitions,
    face_vertices,
    facet_inequalities,
    fhm_inequality,
    in_fhm_polytope,
    in_koren_polytope,
    interval_step_vector,
    irredundancy_witness,
    is_degree_partition,
    is_degree_sequence,
    monotone_inequality,
    pair_step_vector,
)
from .runs import (
    PoolResult,
    RunDecomposition,
    ascending_runs,
    average_runs,
    descent_set,
    pava_oracle,
    pool,
)
from .sampling import (
    DEFAULT_SEED,
    make_rng,
    random_decreasing_vector,
    random_pair_costs,
    random_rational,
    random_rational_vector,
)
from .threshold import (
    OrderIdeal,
    degree_partition_of_ideal,
    enumerate_order_ideals,
    enumerate_threshold_partitions,
    format_edge_list,
    graph_from_weights,
    ideal_from_partition,
    is_order_ideal,
    is_proper_threshold_graph,
    is_threshold_partition,
    pair_poset,
    parse_edge_list,
    proper_threshold_oracle,
    tp_join,
    tp_meet,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "DEFAULT_SEED",
    "FacetInequality",
    "FhmMembership",
    "IntSequence",
    "OrderIdeal",
    "PairCosts",
    "Partition",
    "PoolResult",
    "RGraph",
    "Rational",
    "RationalVector",
    "RunDecomposition",
    "UnitTransformation",
    "VolumeEstimate",
    "affine_rank",
    "apply_incidence",
    "apply_unit_transformation",
    "are_adjacent",
    "as_rational_vector",
    "ascending_runs",
    "average_runs",
    "brute_force_max_weight_ideals",
    "brute_force_optimal_partition",
    "brute_force_r_graphical",
    "certificate_step",
    "check_partition",
    "count_edges",
    "degree_partition_of_ideal",
    "degree_sequence",
    "descent_set",
    "dominating_count",
    "dominating_sum_identity",
    "dp3_volume",
    "ds3_volume_estimate",
    "enumerate_degree_partitions",
    "enumerate_order_ideals",
    "enumerate_r_ideal_partitions",
    "enumerate_r_ideals",
    "enumerate_threshold_partitions",
    "face_vertices",
    "facet_inequalities",
    "fhm_inequality",
    "format_edge_list",
    "format_hypergraph",
    "graph_from_weights",
    "ideal_from_partition",
    "in_fhm_polytope",
    "in_koren_polytope",
    "interval_step_vector",
    "irredundancy_witness",
    "is_degree_partition",
    "is_degree_sequence",
    "is_order_ideal",
    "is_partition",
    "is_proper_threshold_graph",
    "is_r_graphical_partition",
    "is_r_ideal",
    "is_threshold_partition",
    "is_weakly_decreasing",
    "lift_costs",
    "majorizes",
    "make_rng",
    "max_weight_ideal",
    "monotone_inequality",
    "muirhead_chain",
    "objective_value",
    "optimal_threshold_partition",
    "optimality_certificate",
    "pair_poset",
    "pair_step_vector",
    "parse_edge_list",
    "parse_hypergraph",
    "pava_oracle",
    "pool",
    "prefix_sums",
    "proper_threshold_oracle",
    "r_subsets",
    "random_decreasing_vector",
    "random_pair_costs",
    "random_rational",
    "random_rational_vector",
    "realize_r_graph",
    "relabel_rgraph",
    "reverse_saturate",
    "sort_decreasing",
    "tp_join",
    "tp_meet",
]
