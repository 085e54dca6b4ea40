from wsat.graph.base import (
    MAX_VERTICES,
    Edge,
    Graph,
    add_edge,
    add_edges,
    all_pairs,
    as_edge,
    clique_join,
    common_neighbors,
    complement,
    complete_graph,
    connected_components,
    degree,
    delete_vertex,
    disjoint_union,
    edge_from_index,
    edge_index,
    edges,
    empty_graph,
    from_edges,
    has_edge,
    is_complete,
    is_connected,
    is_forest,
    is_subgraph,
    join,
    min_degree,
    missing_edges,
    neighbors,
    num_edges,
    num_pairs,
    path_graph,
    relabel,
    remove_edge,
)
from wsat.graph.canonical import canonical_form, canonical_key, is_isomorphic
from wsat.graph.graph6 import graph6_decode, graph6_encode

__all__ = [
    # Kernel
    "MAX_VERTICES",
    "Edge",
    "Graph",
    # Constructors
    "empty_graph",
    "complete_graph",
    "path_graph",
    "clique_join",
    "from_edges",
    # Edge operations
    "add_edge",
    "add_edges",
    "remove_edge",
    "has_edge",
    "as_edge",
    "edges",
    "num_edges",
    "num_pairs",
    "all_pairs",
    "missing_edges",
    "edge_index",
    "edge_from_index",
    # Graph algebra
    "complement",
    "disjoint_union",
    "join",
    "relabel",
    "delete_vertex",
    # Queries
    "neighbors",
    "degree",
    "min_degree",
    "common_neighbors",
    "connected_components",
    "is_connected",
    "is_forest",
    "is_complete",
    "is_subgraph",
    # Canonical forms and serialization
    "canonical_form",
    "canonical_key",
    "is_isomorphic",
    "graph6_encode",
    "graph6_decode",
]
