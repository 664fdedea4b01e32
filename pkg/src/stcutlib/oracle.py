"""Brute-force ground truth by deletion and reachability.

Everything here follows the definitions directly: an edge (node) is an s-t
bridge (articulation point) iff deleting it leaves t unreachable from s, and
component i holds the nodes first reachable from s once cut i is deleted.
Reachability uses its own depth-first search so that no traversal code is
shared with the algorithm under test.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Collection, Iterable, Sequence, TypeVar

import numpy as np

from stcutlib.errors import OrderViolation, PreconditionUnreachable
from stcutlib.graph import DirectedGraph
from stcutlib.pathfind import NoPath, find_st_path
from stcutlib.stbridge import CutKind

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_PATH_LIMIT = 10_000


def _dfs_reach(
    g: DirectedGraph,
    src: int,
    banned_edges: Collection[int] = (),
    banned_nodes: Collection[int] = (),
    reverse: bool = False,
) -> list[bool]:
    """Mark the nodes reachable from `src` (or reaching it, if `reverse`)."""
    offsets = (g.in_offsets if reverse else g.out_offsets).tolist()
    edge_ids = (g.in_edge_ids if reverse else g.out_edge_ids).tolist()
    ends = (g.tails if reverse else g.heads).tolist()

    marked = [False] * g.n
    if src in banned_nodes:
        return marked
    marked[src] = True
    stack = [src]
    while stack:
        u = stack.pop()
        for k in range(offsets[u], offsets[u + 1]):
            e = edge_ids[k]
            v = ends[e]
            if not marked[v] and e not in banned_edges and v not in banned_nodes:
                marked[v] = True
                stack.append(v)
    return marked


def _map(fn: Callable[[T], R], items: Sequence[T], threads: int) -> list[R]:
    if threads <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _require_reachable(g: DirectedGraph, s: int, t: int) -> None:
    s, t = g.validate_node(s), g.validate_node(t)
    if not _dfs_reach(g, s)[t]:
        raise PreconditionUnreachable(s, t)


def oracle_st_bridges(g: DirectedGraph, s: int, t: int, threads: int = 1) -> frozenset[int]:
    """Edges whose deletion disconnects t from s. O(m (m + n))."""
    _require_reachable(g, s, t)
    edges = range(g.m)
    cut = _map(lambda e: not _dfs_reach(g, s, banned_edges=(e,))[t], edges, threads)
    return frozenset(e for e, is_cut in zip(edges, cut) if is_cut)


def oracle_st_articulation(
    g: DirectedGraph, s: int, t: int, threads: int = 1
) -> frozenset[int]:
    """Nodes other than s and t whose deletion disconnects t from s."""
    _require_reachable(g, s, t)
    nodes = [v for v in range(g.n) if v not in (s, t)]
    cut = _map(lambda v: not _dfs_reach(g, s, banned_nodes=(v,))[t], nodes, threads)
    return frozenset(v for v, is_cut in zip(nodes, cut) if is_cut)


def oracle_components(
    g: DirectedGraph,
    s: int,
    t: int,
    ordered_cuts: Sequence[int],
    kind: CutKind = CutKind.BRIDGE,
) -> np.ndarray:
    """Component label of every node, from the set-difference definition.

    C_i holds the nodes reachable from s with cut i deleted but not with cut
    i-1 deleted; the last component takes what is reachable in the whole
    graph on top of that. For articulation points the exit-side convention
    applies: a_i is labelled i. With s = t only s is labelled.
    """
    comp = np.zeros(g.n, dtype=np.int64)
    if s == t:
        comp[s] = 1
        return comp

    for i, cut in enumerate(ordered_cuts, start=1):
        if kind is CutKind.BRIDGE:
            reach = _dfs_reach(g, s, banned_edges=(cut,))
        else:
            reach = _dfs_reach(g, s, banned_nodes=(cut,))
        comp[np.flatnonzero(np.array(reach) & (comp == 0))] = i

    reach = np.array(_dfs_reach(g, s))
    comp[np.flatnonzero(reach & (comp == 0))] = len(ordered_cuts) + 1

    if kind is CutKind.ARTICULATION:
        for i, a in enumerate(ordered_cuts, start=1):
            comp[a] = i
    return comp


@dataclass(frozen=True)
class PathEnumeration:
    """Simple s-t paths in lexicographic EdgeId order.

    `truncated` is set when more paths exist beyond the ones listed.
    """

    node_paths: tuple[tuple[int, ...], ...]
    edge_paths: tuple[tuple[int, ...], ...]
    truncated: bool

    def __len__(self) -> int:
        return len(self.node_paths)


def enumerate_st_paths(
    g: DirectedGraph, s: int, t: int, limit: int = DEFAULT_PATH_LIMIT
) -> PathEnumeration:
    """All simple s-t paths (parallel edges give distinct paths), up to `limit`."""
    s, t = g.validate_node(s), g.validate_node(t)
    if s == t:
        return PathEnumeration(((s,),), ((),), False)

    offsets, edge_ids, heads = (
        g.out_offsets.tolist(),
        g.out_edge_ids.tolist(),
        g.heads.tolist(),
    )
    reaches_t = _dfs_reach(g, t, reverse=True)

    found_nodes: list[tuple[int, ...]] = []
    found_edges: list[tuple[int, ...]] = []
    truncated = False

    nodes, edges = [s], []
    cursor = [offsets[s]]
    on_path = {s}
    while cursor:
        u = nodes[-1]
        k = cursor[-1]
        if k == offsets[u + 1]:
            cursor.pop()
            on_path.discard(nodes.pop())
            if edges:
                edges.pop()
            continue
        cursor[-1] = k + 1

        e = edge_ids[k]
        v = heads[e]
        if v in on_path or not reaches_t[v]:
            continue
        if v == t:
            if len(found_nodes) == limit:
                truncated = True
                break
            found_nodes.append((*nodes, t))
            found_edges.append((*edges, e))
            continue
        nodes.append(v)
        edges.append(e)
        on_path.add(v)
        cursor.append(offsets[v])

    if truncated:
        logger.warning("path enumeration %d->%d truncated at %d paths", s, t, limit)
    return PathEnumeration(tuple(found_nodes), tuple(found_edges), truncated)


def _cuts_along(
    nodes: Sequence[int], edges: Sequence[int], cuts: Collection[int], kind: CutKind
) -> tuple[int, ...]:
    return tuple(x for x in (edges if kind is CutKind.BRIDGE else nodes) if x in cuts)


def oracle_order(
    g: DirectedGraph,
    s: int,
    t: int,
    cuts: Collection[int],
    kind: CutKind = CutKind.BRIDGE,
    limit: int = DEFAULT_PATH_LIMIT,
    enumeration: PathEnumeration | None = None,
) -> tuple[int, ...]:
    """Order of `cuts` along the shortest s-t path, checked on every path.

    Raises
    ------
    OrderViolation
        If some enumerated s-t path meets the cuts in a different order (or
        misses one).
    """
    path = find_st_path(g, s, t)
    if isinstance(path, NoPath):
        raise PreconditionUnreachable(s, t)

    cuts = frozenset(cuts)
    expected = _cuts_along(path.node_seq, path.edge_seq, cuts, kind)
    if len(expected) != len(cuts):
        raise OrderViolation(path.node_seq, tuple(sorted(cuts)), expected)

    if enumeration is None:
        enumeration = enumerate_st_paths(g, s, t, limit)
    for nodes, edges in zip(enumeration.node_paths, enumeration.edge_paths):
        found = _cuts_along(nodes, edges, cuts, kind)
        if found != expected:
            raise OrderViolation(nodes, expected, found)
    return expected


def oracle_cut_partition(
    g: DirectedGraph,
    s: int,
    t: int,
    cut: int,
    others: Iterable[int],
    kind: CutKind = CutKind.BRIDGE,
) -> tuple[frozenset[int], frozenset[int]]:
    """Split `others` into the cuts met before and after `cut`.

    With `cut` deleted, a cut met before it is still reachable from s and one
    met after it can still reach t; never both, or `cut` would not separate
    s from t.
    """
    if kind is CutKind.BRIDGE:
        ban = {"banned_edges": (cut,)}
        tails, heads = g.tails.tolist(), g.heads.tolist()
        start_of, end_of = (lambda b: tails[b]), (lambda b: heads[b])
    else:
        ban = {"banned_nodes": (cut,)}
        start_of = end_of = lambda a: a

    from_s = _dfs_reach(g, s, **ban)
    to_t = _dfs_reach(g, t, reverse=True, **ban)
    before = frozenset(c for c in others if c != cut and from_s[start_of(c)])
    after = frozenset(c for c in others if c != cut and to_t[end_of(c)])
    return before, after


@dataclass(frozen=True)
class OracleReport:
    bridges: frozenset[int]
    articulation: frozenset[int]
    bridge_order: tuple[int, ...]
    articulation_order: tuple[int, ...]
    comp_bridge: np.ndarray
    comp_artic: np.ndarray
    paths: PathEnumeration


def oracle_report(
    g: DirectedGraph,
    s: int,
    t: int,
    limit: int = DEFAULT_PATH_LIMIT,
    threads: int = 1,
) -> OracleReport:
    """Every ground-truth quantity for one instance (t must be reachable)."""
    bridges = oracle_st_bridges(g, s, t, threads)
    articulation = oracle_st_articulation(g, s, t, threads)
    paths = enumerate_st_paths(g, s, t, limit)
    bridge_order = oracle_order(g, s, t, bridges, CutKind.BRIDGE, enumeration=paths)
    articulation_order = oracle_order(
        g, s, t, articulation, CutKind.ARTICULATION, enumeration=paths
    )
    return OracleReport(
        bridges=bridges,
        articulation=articulation,
        bridge_order=bridge_order,
        articulation_order=articulation_order,
        comp_bridge=oracle_components(g, s, t, bridge_order, CutKind.BRIDGE),
        comp_artic=oracle_components(g, s, t, articulation_order, CutKind.ARTICULATION),
        paths=paths,
    )
