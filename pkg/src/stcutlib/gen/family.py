from abc import ABC, abstractmethod
from typing import ClassVar, Sequence

import numpy as np

from stcutlib.errors import BadSpec
from stcutlib.graph import build_graph

from .gen_spec import GeneratedInstance, GenSpec


class Family(ABC):
    """A generator family is a callable turning a spec and a random stream
    into an instance with s = 0 and t = n - 1.

    Subclasses build a list of ``(tail, head)`` pairs; `finish` shuffles them
    into EdgeId order and translates planted edge positions accordingly.
    """

    name: ClassVar[str]
    plants: ClassVar[bool] = False
    random: ClassVar[bool] = False

    def __call__(self, spec: GenSpec, rng: np.random.Generator) -> GeneratedInstance:
        if spec.family != self.name:
            raise BadSpec(f"{type(self).__name__} cannot generate family {spec.family!r}")
        if spec.unreachable and not self.random:
            raise BadSpec(f"unreachable is only supported by random families, not {self.name}")
        if spec.planted is not None and not self.plants:
            raise BadSpec(f"family {self.name} does not plant cuts")
        return self.generate(spec, rng)

    @abstractmethod
    def generate(self, spec: GenSpec, rng: np.random.Generator) -> GeneratedInstance:
        """Build the instance described by `spec`."""

    def random_pairs(self, rng: np.random.Generator, count: int, lo: int, hi: int) -> np.ndarray:
        """`count` uniform edges with both endpoints in ``[lo, hi)``."""
        return rng.integers(lo, hi, size=(count, 2), dtype=np.int64)

    def chain(self, nodes: Sequence[int]) -> np.ndarray:
        """Edges of the path visiting `nodes` in order."""
        nodes = np.asarray(nodes, dtype=np.int64)
        return np.stack([nodes[:-1], nodes[1:]], axis=1)

    def finish(
        self,
        spec: GenSpec,
        rng: np.random.Generator,
        pairs: np.ndarray,
        planted_positions: Sequence[int] | None = None,
        planted_articulation: Sequence[int] | None = None,
    ) -> GeneratedInstance:
        s, t = 0, spec.n - 1
        order = rng.permutation(len(pairs))
        pairs = pairs[order]

        if spec.unreachable:
            pairs = pairs[pairs[:, 1] != t]

        planted_bridges = None
        if planted_positions is not None:
            new_index = np.empty(len(order), dtype=np.int64)
            new_index[order] = np.arange(len(order))
            planted_bridges = tuple(int(new_index[p]) for p in planted_positions)

        return GeneratedInstance(
            graph=build_graph(spec.n, pairs),
            source=s,
            sink=t,
            planted_bridges=planted_bridges,
            planted_articulation=(
                None if planted_articulation is None else tuple(planted_articulation)
            ),
            spec=spec,
        )
