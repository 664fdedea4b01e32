from typing import Protocol

from stcutlib.graph import DirectedGraph
from stcutlib.pathfind import StPath


class TransformedGraph(Protocol):
    """A rewritten graph the interrupted search can run on.

    `path` runs from `source` to `sink` through the rewritten node ids; its
    edge ids are the ones reported when the search is interrupted at them.
    """

    @property
    def graph(self) -> DirectedGraph:
        ...

    @property
    def path(self) -> StPath:
        ...

    @property
    def source(self) -> int:
        ...

    @property
    def sink(self) -> int:
        ...
