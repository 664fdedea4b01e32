"""s-t articulation points via the bridge search on the node-split graph.

In the split graph the internal edge of every s-t articulation point is an
s₀-t₁ bridge, and so are the internal edges of s and t themselves. The latter
two are dropped when mapping back; s and t are never reported.

Component convention: an articulation point a_i is the exit of C_i and the
entry of C_{i+1}; its reported comp is i, taken from its x₀ image.
"""

import logging
from dataclasses import replace

import numpy as np

from stcutlib.errors import NonInternalBridge
from stcutlib.graph import DirectedGraph
from stcutlib.pathfind import NoPath, find_st_path
from stcutlib.stbridge import (
    CutKind,
    CutReport,
    SearchParams,
    group_components,
    interrupted_search,
    single_component_report,
)
from stcutlib.transform import SplitTransform, split_transform

logger = logging.getLogger(__name__)


def map_back(split_report: CutReport, st: SplitTransform) -> CutReport:
    """Translate a bridge report on ``st.graph`` into an articulation report.

    Raises
    ------
    NonInternalBridge
        If a bridge of the split graph is not an internal edge.
    """
    s, t = st.original_path.source, st.original_path.sink

    # count of articulation points among the cuts preceding each split phase
    preceding = [0]
    sequence: list[int] = []
    for e in split_report.sequence:
        if not st.is_internal(e):
            raise NonInternalBridge(e)
        x = st.node_of_internal[e]
        if x not in (s, t):
            sequence.append(x)
        preceding.append(len(sequence))

    split_comp = split_report.comp[: st.n_original].tolist()
    comp = [1 + preceding[c - 1] if c else 0 for c in split_comp]
    comp_array = np.array(comp, dtype=np.int64)
    comp_array.flags.writeable = False

    return CutReport(
        kind=CutKind.ARTICULATION,
        sequence=tuple(sequence),
        comp=comp_array,
        components=group_components(comp, len(sequence) + 1),
        path=st.original_path,
        stats=replace(
            split_report.stats,
            phases=len(sequence) + 1,
            visited=sum(1 for c in comp if c),
            exits=tuple(sequence),
        ),
    )


def st_articulation_points(
    g: DirectedGraph, s: int, t: int, params: SearchParams | None = None
) -> CutReport | NoPath:
    """All s-t articulation points of `g` other than s and t, in path order."""
    s, t = g.validate_node(s), g.validate_node(t)
    if s == t:
        return single_component_report(CutKind.ARTICULATION, g.n, s)

    path = find_st_path(g, s, t)
    if isinstance(path, NoPath):
        return path

    st = split_transform(g, path, s, t)
    split_report = interrupted_search(st, st.source, st.sink, params)
    report = map_back(split_report, st)
    logger.debug("%d articulation points between %d and %d", len(report.sequence), s, t)
    return report
