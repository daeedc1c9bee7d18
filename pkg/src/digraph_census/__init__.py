"""Subgraph statistics for digraphs: triad census, induced and 4-vertex path
counts, circular interval digraphs, extremal families and exhaustive checks."""

from .bounds import BoundReport
from .census import (
    TriadCensus,
    bondy_bound,
    bondy_refined_bound,
    census,
    census_bruteforce,
    census_residuals,
    thomasse_bound,
)
from .cig import (
    INF,
    CircularIntervalDigraph,
    ExtremeState,
    apply_augmenting_transform,
    check_gbeta_inequality,
    clockwise_distance,
    extreme_state,
    find_augmenting_sequence,
    generate_G_beta,
    h_beta_edges,
    p3_closed_form,
    p3_of_Gbeta_minus_X,
    pendant_count,
    slacks,
    toggle_delta,
)
from .digraph import (
    Digraph,
    PathKind,
    count_induced_p3,
    count_paths,
    count_walks,
    is_k_free,
    min_out_degree,
)
from .edgelist import format_edge_list, parse_edge_list, read_edge_list
from .errors import DigraphError, EdgeListError, PreconditionError, SizeLimitError
from .families import layered_tournaments, recursive_family
from .path4 import (
    FourTupleStats,
    check_outdegree_corollary,
    check_p4_bounds,
    count_squares,
    four_tuple_stats,
    m_count,
)
from .search import enumerate_digon_free, local_search, verify_cig, verify_thomasse

__version__ = "0.1.0"

__all__ = [
    "apply_augmenting_transform",
    "bondy_bound",
    "bondy_refined_bound",
    "BoundReport",
    "census",
    "census_bruteforce",
    "census_residuals",
    "check_gbeta_inequality",
    "check_outdegree_corollary",
    "check_p4_bounds",
    "CircularIntervalDigraph",
    "clockwise_distance",
    "count_induced_p3",
    "count_paths",
    "count_squares",
    "count_walks",
    "Digraph",
    "DigraphError",
    "EdgeListError",
    "enumerate_digon_free",
    "extreme_state",
    "ExtremeState",
    "find_augmenting_sequence",
    "format_edge_list",
    "four_tuple_stats",
    "FourTupleStats",
    "generate_G_beta",
    "h_beta_edges",
    "INF",
    "is_k_free",
    "layered_tournaments",
    "local_search",
    "m_count",
    "min_out_degree",
    "p3_closed_form",
    "p3_of_Gbeta_minus_X",
    "parse_edge_list",
    "PathKind",
    "pendant_count",
    "PreconditionError",
    "read_edge_list",
    "recursive_family",
    "SizeLimitError",
    "slacks",
    "thomasse_bound",
    "toggle_delta",
    "TriadCensus",
    "verify_cig",
    "verify_thomasse",
]
