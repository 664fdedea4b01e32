"""Directed multigraph with stable edge identities."""

from dataclasses import dataclass
from functools import cached_property
from typing import Collection, Iterable, Sequence

import numpy as np

from stcutlib.errors import EndpointOutOfRange, GraphError, NodeOutOfRange, UnknownEdgeId

EdgePairs = Sequence[tuple[int, int]] | np.ndarray
_MAX_NODES = np.iinfo(np.int64).max - 1


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int

    @property
    def is_self_loop(self) -> bool:
        return self.tail == self.head


def _readonly(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def _check_node_count(n: int) -> None:
    if not 0 <= n <= _MAX_NODES:
        raise GraphError(f"node count must lie in [0, {_MAX_NODES}], got {n}")


def _csr(keys: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Group edge ids by `keys` (tail or head), ascending edge id inside a group."""
    order = np.argsort(keys, kind="stable").astype(np.int64)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(keys, minlength=n), out=offsets[1:])
    return _readonly(offsets), _readonly(order)


class DirectedGraph:
    """Immutable directed multigraph over the dense node set ``[0, n)``.

    EdgeId ``i`` is the i-th edge handed to the constructor. Both adjacency
    directions are stored in CSR form: the outgoing edge ids of ``u`` are
    ``out_edge_ids[out_offsets[u]:out_offsets[u + 1]]``, in ascending order.
    Parallel edges and self-loops are kept as given.
    """

    def __init__(self, n: int, tails: np.ndarray, heads: np.ndarray):
        _check_node_count(n)
        if len(tails) != len(heads):
            raise GraphError("tails and heads must have the same length")

        self._n = int(n)
        self._tails = _readonly(np.array(tails, dtype=np.int64))
        self._heads = _readonly(np.array(heads, dtype=np.int64))
        if self.m and (
            min(self._tails.min(), self._heads.min()) < 0
            or max(self._tails.max(), self._heads.max()) >= self._n
        ):
            raise GraphError(f"edge endpoints must lie in [0, {self._n})")
        self._out_offsets, self._out_edge_ids = _csr(self._tails, self._n)
        self._in_offsets, self._in_edge_ids = _csr(self._heads, self._n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._tails)

    @property
    def tails(self) -> np.ndarray:
        return self._tails

    @property
    def heads(self) -> np.ndarray:
        return self._heads

    @property
    def out_offsets(self) -> np.ndarray:
        return self._out_offsets

    @property
    def out_edge_ids(self) -> np.ndarray:
        return self._out_edge_ids

    @property
    def in_offsets(self) -> np.ndarray:
        return self._in_offsets

    @property
    def in_edge_ids(self) -> np.ndarray:
        return self._in_edge_ids

    def validate_node(self, u: int) -> int:
        if not 0 <= u < self._n:
            raise NodeOutOfRange(u, self._n)
        return int(u)

    def validate_edge(self, e: int) -> int:
        if not 0 <= e < self.m:
            raise UnknownEdgeId(e, self.m)
        return int(e)

    def out_adj(self, u: int) -> np.ndarray:
        """Outgoing edge ids of `u` in ascending order."""
        return self._out_edge_ids[self._out_offsets[u] : self._out_offsets[u + 1]]

    def in_adj(self, u: int) -> np.ndarray:
        """Incoming edge ids of `u` in ascending order."""
        return self._in_edge_ids[self._in_offsets[u] : self._in_offsets[u + 1]]

    def out_degree(self, u: int) -> int:
        return int(self._out_offsets[u + 1] - self._out_offsets[u])

    def in_degree(self, u: int) -> int:
        return int(self._in_offsets[u + 1] - self._in_offsets[u])

    def edge(self, e: int) -> Edge:
        e = self.validate_edge(e)
        return Edge(e, int(self._tails[e]), int(self._heads[e]))

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(
            Edge(i, tail, head)
            for i, (tail, head) in enumerate(self.edge_pairs())
        )

    def edge_pairs(self) -> list[tuple[int, int]]:
        return list(zip(self._tails.tolist(), self._heads.tolist()))

    @cached_property
    def forward_lists(self) -> tuple[list[int], list[int], list[int]]:
        """``(out_offsets, out_edge_ids, heads)`` as plain lists.

        Traversals index these in tight loops, where list indexing is far
        cheaper than numpy scalar access.
        """
        return (
            self._out_offsets.tolist(),
            self._out_edge_ids.tolist(),
            self._heads.tolist(),
        )

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self._n}, m={self.m})"


def _as_pair_array(
    edge_pairs: EdgePairs | Iterable[tuple[int, int]], n: int, first_index: int = 0
) -> np.ndarray:
    if not isinstance(edge_pairs, np.ndarray):
        edge_pairs = list(edge_pairs)
        # on Python ints, numpy conversion overflows past int64
        for i, pair in enumerate(edge_pairs):
            for endpoint in pair:
                if not 0 <= endpoint < n:
                    raise EndpointOutOfRange(first_index + i, endpoint, n)
    pairs = np.array(edge_pairs, dtype=np.int64)
    if pairs.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise GraphError("edge pairs must be (tail, head) tuples")
    return pairs


def _check_endpoints(pairs: np.ndarray, n: int, first_index: int = 0) -> None:
    bad = (pairs < 0) | (pairs >= n)
    if bad.any():
        row, col = np.argwhere(bad)[0]
        raise EndpointOutOfRange(first_index + int(row), int(pairs[row, col]), n)


def build_graph(n: int, edge_pairs: EdgePairs | Iterable[tuple[int, int]]) -> DirectedGraph:
    """Build a graph whose EdgeId ``i`` is the i-th ``(tail, head)`` pair.

    Raises
    ------
    EndpointOutOfRange
        If an endpoint lies outside ``[0, n)``; carries the offending edge index.
    """
    _check_node_count(n)
    pairs = _as_pair_array(edge_pairs, n)
    _check_endpoints(pairs, n)
    return DirectedGraph(n, pairs[:, 0], pairs[:, 1])


@dataclass(frozen=True)
class EditedGraph:
    """Result of `remove_edges_add_edges`.

    ``origin[e]`` is the EdgeId in the input graph of edge ``e`` of the new
    graph, or ``-1`` if ``e`` was appended.
    """

    graph: DirectedGraph
    origin: np.ndarray

    def added_ids(self) -> range:
        first = int(np.count_nonzero(self.origin >= 0))
        return range(first, self.graph.m)


def remove_edges_add_edges(
    g: DirectedGraph,
    remove: Collection[int],
    add: EdgePairs | Iterable[tuple[int, int]],
    add_nodes: int = 0,
) -> EditedGraph:
    """Return ``(G \\ remove) ∪ add`` as a new graph.

    Surviving edges keep their relative order and are renumbered densely from
    0; appended edges follow in the order given. `add_nodes` extra nodes are
    appended to the node range before `add` is validated.
    """
    if add_nodes < 0:
        raise GraphError(f"cannot add a negative number of nodes ({add_nodes})")

    keep = np.ones(g.m, dtype=bool)
    for e in remove:
        keep[g.validate_edge(e)] = False
    survivors = np.flatnonzero(keep).astype(np.int64)

    n = g.n + add_nodes
    _check_node_count(n)
    added = _as_pair_array(add, n, first_index=len(survivors))
    _check_endpoints(added, n, first_index=len(survivors))

    tails = np.concatenate([g.tails[survivors], added[:, 0]])
    heads = np.concatenate([g.heads[survivors], added[:, 1]])
    origin = np.concatenate([survivors, np.full(len(added), -1, dtype=np.int64)])
    return EditedGraph(DirectedGraph(n, tails, heads), _readonly(origin))
