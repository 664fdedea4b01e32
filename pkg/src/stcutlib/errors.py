"""Exceptions raised by stcutlib.

Caller mistakes derive from `ValueError`, broken internal invariants from
`RuntimeError`. An unreachable sink is not an error: see `pathfind.NoPath`.
"""

from typing import Sequence


class StCutError(Exception):
    """Base class of every exception raised by this package."""


class GraphError(StCutError, ValueError):
    """Invalid graph input (construction, parsing, path validation)."""


class EndpointOutOfRange(GraphError):
    def __init__(self, edge_index: int, endpoint: int, n: int):
        super().__init__(
            f"edge {edge_index}: endpoint {endpoint} outside node range [0, {n})"
        )
        self.edge_index = edge_index
        self.endpoint = endpoint
        self.n = n


class NodeOutOfRange(GraphError):
    def __init__(self, node: int, n: int):
        super().__init__(f"node {node} outside node range [0, {n})")
        self.node = node
        self.n = n


class UnknownEdgeId(GraphError):
    def __init__(self, edge_id: int, m: int):
        super().__init__(f"unknown edge id {edge_id} (graph has {m} edges)")
        self.edge_id = edge_id
        self.m = m


class ParseError(GraphError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class MissingHeader(ParseError):
    def __init__(self, line: int = 1):
        super().__init__(line, "missing header line 'n m s t'")


class PathNotInGraph(GraphError):
    def __init__(self, edge_id: int, reason: str):
        super().__init__(f"path edge {edge_id}: {reason}")
        self.edge_id = edge_id
        self.reason = reason


class SourceBanned(StCutError, ValueError):
    def __init__(self, node: int):
        super().__init__(f"search source {node} is itself banned")
        self.node = node


class PreconditionUnreachable(StCutError, ValueError):
    def __init__(self, source: int, sink: int):
        super().__init__(f"sink {sink} is not reachable from source {source}")
        self.source = source
        self.sink = sink


class BadSpec(StCutError, ValueError):
    def __init__(self, reason: str):
        super().__init__(f"invalid generator spec: {reason}")
        self.reason = reason


class SearchUnreachable(StCutError, RuntimeError):
    """The interrupted search stalled with no path edge left to cross.

    Only possible when the transformed graph was not built from a valid s-t
    path of a graph in which the sink is reachable.
    """

    def __init__(self, phase: int, high_water: int):
        super().__init__(
            f"search exhausted in phase {phase} with no forward path edge "
            f"after path position {high_water}"
        )
        self.phase = phase
        self.high_water = high_water


class NonInternalBridge(StCutError, RuntimeError):
    def __init__(self, edge_id: int):
        super().__init__(
            f"bridge {edge_id} of the split graph is not an internal edge"
        )
        self.edge_id = edge_id


class OrderViolation(StCutError, RuntimeError):
    def __init__(self, path: Sequence[int], expected: Sequence[int], found: Sequence[int]):
        super().__init__(
            f"cut order {list(found)} along path {list(path)} "
            f"differs from expected {list(expected)}"
        )
        self.path = tuple(path)
        self.expected = tuple(expected)
        self.found = tuple(found)
