"""The (k,n)-level graph L_{k,n}: k-subsets and (n-k)-subsets of {1..n} joined by inclusion."""
from .core import LevelParams, VertexSet, binom, initial_vertex, is_edge, make_params, make_vertex
from .layers import LayerTable, delta, enumerate_layer, f, gamma, layer_table, verify_identities
from .metric import LayerIndex, Side, classify, distance, distance_matrix
from .oracle import (
    AdjacencyGraph,
    VerificationReport,
    all_pairs_bfs,
    bfs_distances,
    build_graph,
    verify_distance_formula,
    verify_layers,
    verify_metric_axioms,
    verify_shortest_paths,
)
from .pathfinder import Path, Relabeling, canonicalize, shortest_path

__all__ = [
    "AdjacencyGraph", "LayerIndex", "LayerTable", "LevelParams", "Path", "Relabeling", "Side",
    "VerificationReport", "VertexSet", "all_pairs_bfs", "bfs_distances", "binom", "build_graph",
    "canonicalize", "classify", "delta", "distance", "distance_matrix", "enumerate_layer", "f",
    "gamma", "initial_vertex", "is_edge", "layer_table", "make_params", "make_vertex",
    "shortest_path", "verify_distance_formula", "verify_identities", "verify_layers",
    "verify_metric_axioms", "verify_shortest_paths",
]
