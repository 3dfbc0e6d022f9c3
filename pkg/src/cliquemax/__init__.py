"""Clique counts of graphs with bounded degree and a fixed number of edges.

The extremal graphs are ``aK_{r+1}`` plus a colex graph on the leftover
edges; this package builds them, counts cliques exactly, analyzes clusters
and local moves, and checks the extremal claim by exhaustive search.
"""

from .cliques import CliqueProfile, clique_profile, k_total, kt_per_edge
from .clusters import ClusterDecomposition, analyze_cluster, classify_cluster, find_clusters, is_tight, tight_edges
from .colex import Decomposition, build_colex, colex_unrank, decompose, extremal_family, g, k_colex, kt_colex
from .graph_core import (
    CapacityError,
    Graph,
    canonical_form,
    common_neighborhood,
    complement_within,
    components,
    disjoint_union,
    from_edges,
    from_graph6,
    to_graph6,
)
from .laws import LawReport
from .moves import MoveOutcome, colex_fold, fixed_loss, flell_bound, fold, improve, maxfl_bound, partial_fold
from .search import SearchReport, SearchSpec, enumerate_graphs, f_max, verify_kt, verify_main_theorem

__version__ = "0.1.0"
