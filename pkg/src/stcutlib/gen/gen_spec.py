from dataclasses import dataclass, field
from typing import Iterator, Literal, get_args

import numpy as np

from stcutlib.errors import BadSpec
from stcutlib.graph import DirectedGraph

FamilyName = Literal["random_digraph", "layered_dag", "planted_chain", "parallel_braid"]
FAMILY_NAMES: tuple[str, ...] = get_args(FamilyName)


def make_rng(seed: int) -> np.random.Generator:
    """Philox counter-based stream, fixed regardless of numpy's default bit generator."""
    return np.random.Generator(np.random.Philox(seed))


@dataclass(frozen=True)
class GenSpec:
    """Description of one generated instance.

    Attributes:
        - family: generator family
        - n: node count (at least 2)
        - density: random edges per node on top of the family's skeleton
        - seed: 64-bit seed of the Philox stream
        - planted: number of planted bridges (planted_chain only, default 2)
        - unreachable: drop every edge into t (random families only)
    """

    family: FamilyName
    n: int
    density: float = field(default=1.5)
    seed: int = field(default=0)
    planted: int | None = field(default=None)
    unreachable: bool = field(default=False)

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise BadSpec(f"unknown family {self.family!r}, expected one of {FAMILY_NAMES}")
        if self.n < 2:
            raise BadSpec(f"n must be at least 2, got {self.n}")
        if self.density < 0:
            raise BadSpec(f"density must be non-negative, got {self.density}")
        if not 0 <= self.seed < 2**64:
            raise BadSpec(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.planted is not None and self.planted < 0:
            raise BadSpec(f"planted must be non-negative, got {self.planted}")


@dataclass(frozen=True)
class GeneratedInstance:
    """A generated graph with its terminals and, for planted families, the
    cut sequences known by construction.

    Unpacks as ``graph, s, t, planted_bridges``.
    """

    graph: DirectedGraph
    source: int
    sink: int
    planted_bridges: tuple[int, ...] | None
    planted_articulation: tuple[int, ...] | None
    spec: GenSpec

    def __iter__(self) -> Iterator:
        return iter((self.graph, self.source, self.sink, self.planted_bridges))
