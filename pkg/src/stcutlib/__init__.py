"""Ordered s-t bridges and s-t articulation points of directed graphs in
linear time, with a brute-force oracle, instance generators and a CLI."""

from .errors import (
    BadSpec,
    GraphError,
    NonInternalBridge,
    OrderViolation,
    ParseError,
    PreconditionUnreachable,
    SearchUnreachable,
    StCutError,
)
from .graph import DirectedGraph, build_graph, parse_edge_list, serialize_edge_list
from .pathfind import NoPath, StPath, find_st_path, reachable_set
from .stbridge import CutKind, CutReport, SearchParams, SearchStats, st_bridges
from .stcut import st_articulation_points

__all__ = [
    "BadSpec",
    "CutKind",
    "CutReport",
    "DirectedGraph",
    "GraphError",
    "NoPath",
    "NonInternalBridge",
    "OrderViolation",
    "ParseError",
    "PreconditionUnreachable",
    "SearchParams",
    "SearchStats",
    "SearchUnreachable",
    "StCutError",
    "StPath",
    "build_graph",
    "find_st_path",
    "parse_edge_list",
    "reachable_set",
    "serialize_edge_list",
    "st_articulation_points",
    "st_bridges",
]
