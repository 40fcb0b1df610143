"""Exact graph invariants and a checker for chromatic-number upper bounds."""

from .bounds import BOUNDS, CATALOG, BoundVerdict, evaluate_bound, evaluate_pair, slack_statistics
from .coloring import (
    Coloring,
    all_optimal_classes_at_most,
    enumerate_optimal_colorings,
    iota,
    is_stingy,
    iter_optimal_colorings,
    stingy_coloring,
)
from .graph import Graph, complement, decode_graph6, delete_vertices, encode_graph6, from_edge_list, induced_subgraph
from .invariants import (
    InvariantRecord,
    chromatic_number,
    clique_number,
    doubly_critical_edges,
    independence_number,
    max_degree,
    oracle_chromatic_number,
)
from .respectful import PartialColoring, RemainderReport, is_r_greedy, is_respectful, minimal_remainder_respectful

__all__ = [name for name in dir() if not name.startswith("_")]
