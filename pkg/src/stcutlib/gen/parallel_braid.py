import numpy as np

from .family import Family
from .gen_spec import GeneratedInstance, GenSpec


class ParallelBraid(Family):
    """Two internally node-disjoint s-t strands plus random extra edges.

    Adding edges never creates a cut, so the instance has neither s-t bridges
    nor s-t articulation points.
    """

    name = "parallel_braid"

    def generate(self, spec: GenSpec, rng: np.random.Generator) -> GeneratedInstance:
        n = spec.n
        s, t = 0, n - 1
        inner = rng.permutation(np.arange(1, n - 1, dtype=np.int64)).tolist()
        half = (len(inner) + 1) // 2

        strands = [
            self.chain([s, *inner[:half], t]),
            self.chain([s, *inner[half:], t]),
        ]
        extra = self.random_pairs(rng, int(round(spec.density * n)), 0, n)

        return self.finish(
            spec,
            rng,
            np.concatenate([*strands, extra]),
            planted_positions=(),
            planted_articulation=(),
        )
