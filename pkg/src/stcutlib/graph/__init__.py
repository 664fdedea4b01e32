from .digraph import (
    DirectedGraph,
    Edge,
    EditedGraph,
    build_graph,
    remove_edges_add_edges,
)
from .edgelist import parse_edge_list, read_labels, serialize_edge_list

__all__ = [
    "DirectedGraph",
    "Edge",
    "EditedGraph",
    "build_graph",
    "remove_edges_add_edges",
    "parse_edge_list",
    "read_labels",
    "serialize_edge_list",
]
