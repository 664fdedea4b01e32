"""s-t paths and reachability under edge/node deletions."""

from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Collection, Mapping, Sequence

from stcutlib.errors import PathNotInGraph, SourceBanned
from stcutlib.graph import DirectedGraph


@dataclass(frozen=True)
class NoPath:
    """Result value: `sink` is not reachable from `source`."""

    source: int
    sink: int


@dataclass(frozen=True)
class StPath:
    """A simple path given by its edge ids, with the visited nodes in order.

    ``node_seq[i]`` is the tail of ``edge_seq[i]``; ``pos_on_path`` maps each
    path node to its index in ``node_seq``.
    """

    edge_seq: tuple[int, ...]
    node_seq: tuple[int, ...]
    pos_on_path: Mapping[int, int] = field(compare=False, repr=False)

    @property
    def source(self) -> int:
        return self.node_seq[0]

    @property
    def sink(self) -> int:
        return self.node_seq[-1]

    def __len__(self) -> int:
        return len(self.edge_seq)

    def __contains__(self, node: object) -> bool:
        return node in self.pos_on_path

    @classmethod
    def trivial(cls, s: int) -> "StPath":
        return cls((), (s,), MappingProxyType({s: 0}))

    @classmethod
    def from_edges(cls, g: DirectedGraph, s: int, edge_seq: Sequence[int]) -> "StPath":
        """Build a path from `s` along `edge_seq`, checking it exists in `g`.

        Raises
        ------
        PathNotInGraph
            If an edge id is unknown, the edges do not chain, or a node repeats.
        """
        s = g.validate_node(s)
        nodes = [s]
        pos = {s: 0}
        for e in edge_seq:
            if not 0 <= e < g.m:
                raise PathNotInGraph(e, f"unknown edge id (graph has {g.m} edges)")
            tail, head = int(g.tails[e]), int(g.heads[e])
            if tail != nodes[-1]:
                raise PathNotInGraph(e, f"starts at {tail}, expected {nodes[-1]}")
            if head in pos:
                raise PathNotInGraph(e, f"revisits node {head}")
            pos[head] = len(nodes)
            nodes.append(head)
        return cls(tuple(int(e) for e in edge_seq), tuple(nodes), MappingProxyType(pos))

    def in_graph(self, g: DirectedGraph) -> "StPath":
        """Re-check this path against `g`, nodes included.

        Raises
        ------
        PathNotInGraph
            If the edges do not form a path of `g` through exactly `node_seq`.
        """
        if not 0 <= self.source < g.n:
            raise PathNotInGraph(-1, f"source {self.source} outside node range [0, {g.n})")
        checked = StPath.from_edges(g, self.source, self.edge_seq)
        for e, found, expected in zip(self.edge_seq, checked.node_seq[1:], self.node_seq[1:]):
            if found != expected:
                raise PathNotInGraph(e, f"leads to {found} in this graph, not {expected}")
        if len(checked.node_seq) != len(self.node_seq):
            raise PathNotInGraph(-1, "node sequence does not match the edge sequence")
        return checked


def find_st_path(g: DirectedGraph, s: int, t: int) -> StPath | NoPath:
    """Shortest s-t path by breadth-first search, or `NoPath`.

    Neighbours are scanned by ascending EdgeId and each node keeps the first
    edge that discovered it, so the result is fully determined by edge order.
    """
    s, t = g.validate_node(s), g.validate_node(t)
    if s == t:
        return StPath.trivial(s)

    offsets, edge_ids, heads = g.forward_lists
    parent_edge = [-1] * g.n
    seen = [False] * g.n
    seen[s] = True
    queue = deque([s])
    while queue and not seen[t]:
        u = queue.popleft()
        for k in range(offsets[u], offsets[u + 1]):
            e = edge_ids[k]
            v = heads[e]
            if not seen[v]:
                seen[v] = True
                parent_edge[v] = e
                queue.append(v)

    if not seen[t]:
        return NoPath(s, t)

    tails = g.tails
    reversed_edges = []
    v = t
    while v != s:
        e = parent_edge[v]
        reversed_edges.append(e)
        v = int(tails[e])
    return StPath.from_edges(g, s, reversed_edges[::-1])


def reachable_set(
    g: DirectedGraph,
    src: int,
    banned_edges: Collection[int] = frozenset(),
    banned_nodes: Collection[int] = frozenset(),
) -> set[int]:
    """Nodes reachable from `src` without using a banned edge or node.

    Raises
    ------
    SourceBanned
        If `src` itself is banned.
    """
    src = g.validate_node(src)
    if src in banned_nodes:
        raise SourceBanned(src)

    offsets, edge_ids, heads = g.forward_lists
    seen = {src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for k in range(offsets[u], offsets[u + 1]):
            e = edge_ids[k]
            v = heads[e]
            if v not in seen and e not in banned_edges and v not in banned_nodes:
                seen.add(v)
                queue.append(v)
    return seen
