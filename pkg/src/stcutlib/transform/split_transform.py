"""Node-split rewrite used to find s-t articulation points.

Every node x on the path P is split into x₀, which keeps x's id and all its
incoming edges, and x₁ = n + pos(x), which takes over all its outgoing edges.
The internal edge x₀ → x₁ completes the split path s₀ s₁ … t₀ t₁. The
rewritten graph then holds

- EdgeIds ``[0, m)``: every original edge with its tail rewired, so the
  forward path edges are still present and original ids survive,
- EdgeIds ``[m, m + |P|)``: the reversal of each path edge, in path order,
- EdgeIds ``[m + |P|, m + |P| + |V(P)|)``: each internal edge, reversed
  (x₁ → x₀), in path order.
"""

import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from stcutlib.errors import PathNotInGraph
from stcutlib.graph import DirectedGraph
from stcutlib.pathfind import StPath

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitTransform:
    graph: DirectedGraph
    path: StPath
    original_path: StPath
    split_in: Mapping[int, int]
    split_out: Mapping[int, int]
    internal_edge_of: Mapping[int, int]
    node_of_internal: Mapping[int, int]
    n_original: int
    m_original: int

    @property
    def source(self) -> int:
        return self.path.source

    @property
    def sink(self) -> int:
        return self.path.sink

    def is_internal(self, e: int) -> bool:
        return e in self.node_of_internal

    def restore(self) -> DirectedGraph:
        """Drop the added edges and merge every split pair back into one node."""
        tails = self.graph.tails[: self.m_original].copy()
        heads = self.graph.heads[: self.m_original].copy()
        path_nodes = np.array(self.original_path.node_seq, dtype=np.int64)
        split = tails >= self.n_original
        tails[split] = path_nodes[tails[split] - self.n_original]
        return DirectedGraph(self.n_original, tails, heads)


def split_transform(g: DirectedGraph, p: StPath, s: int, t: int) -> SplitTransform:
    """Split the nodes of `p`, then reverse the split path keeping the forward
    copies of its non-internal edges.

    Raises
    ------
    PathNotInGraph
        If `p` is not an s-t path of `g`.
    """
    p = p.in_graph(g)
    if p.source != s or p.sink != t:
        raise PathNotInGraph(
            p.edge_seq[0] if p.edge_seq else -1,
            f"path runs {p.source}->{p.sink}, expected {s}->{t}",
        )

    n, m = g.n, g.m
    nodes = np.array(p.node_seq, dtype=np.int64)
    k = len(nodes)
    outs = n + np.arange(k, dtype=np.int64)

    out_image = np.arange(n, dtype=np.int64)
    out_image[nodes] = outs

    # reversed path edge of u₁ → v₀ is v₀ → u₁
    rev_path_tails = nodes[1:]
    rev_path_heads = outs[:-1]

    tails = np.concatenate([out_image[g.tails], rev_path_tails, outs])
    heads = np.concatenate([g.heads, rev_path_heads, nodes])
    graph = DirectedGraph(n + k, tails, heads)

    first_internal = m + len(p.edge_seq)
    internal_edge_of = {x: first_internal + j for j, x in enumerate(p.node_seq)}

    split_nodes: list[int] = []
    split_edges: list[int] = []
    for j, x in enumerate(p.node_seq):
        split_nodes += [x, n + j]
        split_edges.append(internal_edge_of[x])
        if j < len(p.edge_seq):
            split_edges.append(p.edge_seq[j])
    split_path = StPath(
        tuple(split_edges),
        tuple(split_nodes),
        MappingProxyType({v: i for i, v in enumerate(split_nodes)}),
    )

    logger.debug("split %d path nodes of %r into %r", k, g, graph)
    return SplitTransform(
        graph=graph,
        path=split_path,
        original_path=p,
        split_in=MappingProxyType({x: x for x in p.node_seq}),
        split_out=MappingProxyType({x: n + j for j, x in enumerate(p.node_seq)}),
        internal_edge_of=MappingProxyType(internal_edge_of),
        node_of_internal=MappingProxyType({e: x for x, e in internal_edge_of.items()}),
        n_original=n,
        m_original=m,
    )
