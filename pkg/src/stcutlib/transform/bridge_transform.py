"""Reverse-path rewrite used to find s-t bridges."""

import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from stcutlib.graph import DirectedGraph, remove_edges_add_edges
from stcutlib.pathfind import StPath

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BridgeTransform:
    """``(G \\ P) ∪ P⁻¹`` together with the way back to `G`.

    Attributes:
        - graph: the rewritten graph; the m − |P| untouched edges come first (in
          original order), then one reversed edge per path edge, in path order
        - path: the path P in original ids (node ids are unchanged by the rewrite)
        - reversed_of: rewritten EdgeId of a reversed edge → original path EdgeId
        - origin: rewritten EdgeId → original EdgeId, -1 for reversed edges
    """

    graph: DirectedGraph
    path: StPath
    reversed_of: Mapping[int, int]
    origin: np.ndarray

    @property
    def source(self) -> int:
        return self.path.source

    @property
    def sink(self) -> int:
        return self.path.sink

    def restore(self) -> DirectedGraph:
        """Undo the rewrite, reproducing the original EdgeIds exactly."""
        m = self.graph.m
        tails = np.empty(m, dtype=np.int64)
        heads = np.empty(m, dtype=np.int64)

        kept = np.flatnonzero(self.origin >= 0)
        tails[self.origin[kept]] = self.graph.tails[kept]
        heads[self.origin[kept]] = self.graph.heads[kept]
        for e, original in self.reversed_of.items():
            tails[original] = self.graph.heads[e]
            heads[original] = self.graph.tails[e]
        return DirectedGraph(self.graph.n, tails, heads)


def bridge_transform(g: DirectedGraph, p: StPath) -> BridgeTransform:
    """Replace every edge of `p` by its reversal.

    Only the EdgeIds on `p` are touched: a parallel twin of a path edge stays
    forward.

    Raises
    ------
    PathNotInGraph
        If `p` is not a path of `g`.
    """
    p = p.in_graph(g)
    reversed_pairs = [
        (p.node_seq[i + 1], p.node_seq[i]) for i in range(len(p.edge_seq))
    ]
    edited = remove_edges_add_edges(g, p.edge_seq, reversed_pairs)
    reversed_of = dict(zip(edited.added_ids(), p.edge_seq))

    logger.debug("reversed %d path edges of %r", len(p), g)
    return BridgeTransform(edited.graph, p, MappingProxyType(reversed_of), edited.origin)
