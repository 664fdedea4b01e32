"""s-t bridges by a single forward search that is interrupted at each bridge.

The search runs on the reverse-path rewrite of the graph (see
`stcutlib.transform.bridge_transform`). Starting from the entry of the current
component it labels every node it can reach; when the queue runs dry before
the sink is labelled, the deepest labelled node y on the path P is the exit of
the component, the path edge leaving y is the next bridge, and the search
resumes from the head of that edge.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Literal

import numpy as np

from stcutlib.errors import PathNotInGraph, SearchUnreachable
from stcutlib.graph import DirectedGraph
from stcutlib.pathfind import NoPath, StPath, find_st_path
from stcutlib.transform import TransformedGraph, bridge_transform

logger = logging.getLogger(__name__)


class CutKind(str, Enum):
    BRIDGE = "bridges"
    ARTICULATION = "articulation"


@dataclass
class SearchParams:
    """Parameters of the interrupted search.

    Attributes:
        - queue: order in which discovered nodes are expanded; the labelling
          does not depend on it, only the internal visiting order does
    """

    queue: Literal["fifo", "lifo"] = field(default="fifo")

    def __post_init__(self):
        if self.queue not in ("fifo", "lifo"):
            raise ValueError(f"queue must be 'fifo' or 'lifo', got {self.queue!r}")


@dataclass(frozen=True)
class SearchStats:
    """Work counters of one search.

    `exits` holds the path node at which each interruption happened, i.e. the
    exit of every component but the last.

    For articulation points `phases`, `visited` and `exits` refer to the
    original graph, while `pushes` and `edge_scans` count the work done on the
    node-split graph.
    """

    phases: int
    visited: int
    pushes: int
    edge_scans: int
    exits: tuple[int, ...] = ()


@dataclass(frozen=True)
class CutReport:
    """Ordered cut sequence and the components it separates.

    Attributes:
        - kind: bridges (sequence of EdgeIds) or articulation points (NodeIds)
        - sequence: the cuts in the order every s-t path meets them
        - comp: comp[v] = i if v lies in component C_i, 0 if v was never reached
        - components: C_1 … C_{len(sequence)+1}, each a sorted tuple of nodes
        - path: the s-t path P the search was steered by
        - stats: work counters
    """

    kind: CutKind
    sequence: tuple[int, ...]
    comp: np.ndarray
    components: tuple[tuple[int, ...], ...]
    path: StPath
    stats: SearchStats

    def component_of(self, v: int) -> int:
        return int(self.comp[v])

    def entries(self) -> tuple[int, ...]:
        """Entry node of each component (s, then the node after every cut)."""
        if self.kind is CutKind.ARTICULATION:
            return (self.path.source, *self.sequence)
        pos = {e: i for i, e in enumerate(self.path.edge_seq)}
        return (self.path.source, *(self.path.node_seq[pos[b] + 1] for b in self.sequence))

    def exits(self) -> tuple[int, ...]:
        """Exit node of each component (the node before every cut, then t)."""
        if self.kind is CutKind.ARTICULATION:
            return (*self.sequence, self.path.sink)
        pos = {e: i for i, e in enumerate(self.path.edge_seq)}
        return (*(self.path.node_seq[pos[b]] for b in self.sequence), self.path.sink)


def group_components(comp: list[int] | np.ndarray, count: int) -> tuple[tuple[int, ...], ...]:
    """Nodes of each component 1..count, ascending."""
    groups: list[list[int]] = [[] for _ in range(count)]
    for v, c in enumerate(np.asarray(comp).tolist()):
        if c:
            groups[c - 1].append(v)
    return tuple(tuple(group) for group in groups)


def _comp_array(comp: list[int]) -> np.ndarray:
    array = np.array(comp, dtype=np.int64)
    array.flags.writeable = False
    return array


def single_component_report(kind: CutKind, n: int, s: int) -> CutReport:
    """Report for s = t: no cuts, and C_1 = {s}."""
    comp = [0] * n
    comp[s] = 1
    return CutReport(
        kind=kind,
        sequence=(),
        comp=_comp_array(comp),
        components=((s,),),
        path=StPath.trivial(s),
        stats=SearchStats(phases=1, visited=1, pushes=1, edge_scans=0),
    )


def interrupted_search(
    tg: TransformedGraph, s: int, t: int, params: SearchParams | None = None
) -> CutReport:
    """Run the phased forward search on a path-reversed graph.

    Reported cuts are edge ids of ``tg.path``. The deepest labelled path
    position is tracked as a high-water mark while labelling, so locating the
    exit on each interruption costs O(1) and P is walked only once overall.

    Raises
    ------
    SearchUnreachable
        If a phase ends with the sink unlabelled and no path edge left to cross.
    """
    params = params or SearchParams()
    g, path = tg.graph, tg.path
    s, t = g.validate_node(s), g.validate_node(t)
    if path.source != s or path.sink != t:
        raise PathNotInGraph(-1, f"search path runs {path.source}->{path.sink}, expected {s}->{t}")

    offsets, edge_ids, heads = g.forward_lists
    node_seq, edge_seq = path.node_seq, path.edge_seq
    pos = [-1] * g.n
    for i, v in enumerate(node_seq):
        pos[v] = i

    queue: deque[int] = deque()
    pop = queue.popleft if params.queue == "fifo" else queue.pop

    comp = [0] * g.n
    phase = 1
    comp[s] = phase
    queue.append(s)
    pushes = 1
    scans = 0
    high_water = pos[s]
    entry, entry_pushes = s, 0
    sequence: list[int] = []
    exits: list[int] = []

    while True:
        while queue:
            u = pop()
            for k in range(offsets[u], offsets[u + 1]):
                scans += 1
                v = heads[edge_ids[k]]
                if comp[v] == 0:
                    comp[v] = phase
                    queue.append(v)
                    pushes += 1
                    if pos[v] > high_water:
                        high_water = pos[v]

        if comp[t] != 0:
            break
        if high_water >= len(edge_seq):
            raise SearchUnreachable(phase, high_water)

        exits.append(node_seq[high_water])
        sequence.append(edge_seq[high_water])
        logger.debug(
            "phase %d: entry %d, exit %d, %d labelled, cut %d",
            phase, entry, node_seq[high_water], pushes - entry_pushes, edge_seq[high_water],
        )

        high_water += 1
        phase += 1
        z = node_seq[high_water]
        comp[z] = phase
        queue.append(z)
        entry, entry_pushes = z, pushes
        pushes += 1

    stats = SearchStats(
        phases=phase,
        visited=pushes,
        pushes=pushes,
        edge_scans=scans,
        exits=tuple(exits),
    )
    logger.debug("search finished: %d cuts, %d nodes labelled", len(sequence), pushes)
    return CutReport(
        kind=CutKind.BRIDGE,
        sequence=tuple(sequence),
        comp=_comp_array(comp),
        components=group_components(comp, phase),
        path=path,
        stats=stats,
    )


def st_bridges(
    g: DirectedGraph, s: int, t: int, params: SearchParams | None = None
) -> CutReport | NoPath:
    """All s-t bridges of `g` in path order, with their bridge components."""
    s, t = g.validate_node(s), g.validate_node(t)
    if s == t:
        return single_component_report(CutKind.BRIDGE, g.n, s)

    path = find_st_path(g, s, t)
    if isinstance(path, NoPath):
        return path
    return interrupted_search(bridge_transform(g, path), s, t, params)
