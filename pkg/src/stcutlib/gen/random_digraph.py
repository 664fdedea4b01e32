import numpy as np

from .family import Family
from .gen_spec import GeneratedInstance, GenSpec


class RandomDigraph(Family):
    """Uniform random multigraph with a random s-t path stitched in."""

    name = "random_digraph"
    random = True

    def generate(self, spec: GenSpec, rng: np.random.Generator) -> GeneratedInstance:
        n = spec.n
        extra = self.random_pairs(rng, int(round(spec.density * n)), 0, n)

        # s, some distinct intermediate nodes, t
        hops = int(rng.integers(0, n - 1))
        inner = rng.permutation(np.arange(1, n - 1, dtype=np.int64))[:hops]
        stitched = self.chain([0, *inner.tolist(), n - 1])

        return self.finish(spec, rng, np.concatenate([extra, stitched]))
