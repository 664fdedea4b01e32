import numpy as np

from .family import Family
from .gen_spec import GeneratedInstance, GenSpec


class LayeredDag(Family):
    """Acyclic graph over about sqrt(n) layers; edges only point to later layers.

    s = 0 sits in the first layer and t = n - 1 in the last; a chain through
    one random node of every layer guarantees an s-t path.
    """

    name = "layered_dag"
    random = True

    def generate(self, spec: GenSpec, rng: np.random.Generator) -> GeneratedInstance:
        n = spec.n
        n_layers = min(n, max(2, int(round(np.sqrt(n)))))
        layers = np.array_split(np.arange(n, dtype=np.int64), n_layers)
        layer_of = np.empty(n, dtype=np.int64)
        for i, layer in enumerate(layers):
            layer_of[layer] = i

        candidates = self.random_pairs(rng, int(round(spec.density * n)), 0, n)
        lower = layer_of[candidates[:, 0]] < layer_of[candidates[:, 1]]
        upper = layer_of[candidates[:, 0]] > layer_of[candidates[:, 1]]
        extra = np.concatenate([candidates[lower], candidates[upper][:, ::-1]])

        picks = [int(rng.choice(layer)) for layer in layers[1:-1]]
        stitched = self.chain([0, *picks, n - 1])

        return self.finish(spec, rng, np.concatenate([extra, stitched]))
