import numpy as np

from stcutlib.errors import BadSpec

from .family import Family
from .gen_spec import GeneratedInstance, GenSpec

DEFAULT_PLANTED = 2


def planted_chain_spec(k: int, block: int, seed: int = 0, density: float = 1.5) -> GenSpec:
    """Spec of `k` blocks of `block` nodes each, hence k - 1 planted bridges."""
    return GenSpec("planted_chain", n=k * block, density=density, seed=seed, planted=k - 1)


class PlantedChain(Family):
    """Dense blocks joined in series by single connector edges.

    Each block has two edge- and node-disjoint routes from its entry (first
    node) to its exit (last node), a back edge exit -> entry and random
    internal edges, so the connectors are exactly the s-t bridges and their
    endpoints (other than s and t) exactly the s-t articulation points.
    """

    name = "planted_chain"
    plants = True

    def generate(self, spec: GenSpec, rng: np.random.Generator) -> GeneratedInstance:
        planted = DEFAULT_PLANTED if spec.planted is None else spec.planted
        k = planted + 1
        if spec.n < k:
            raise BadSpec(f"{k} blocks need at least {k} nodes, got n={spec.n}")

        size = spec.n // k
        bounds = [(j * size, (j + 1) * size - 1) for j in range(k)]
        bounds[-1] = (bounds[-1][0], spec.n - 1)

        parts = [self._block(rng, entry, exit, spec.density) for entry, exit in bounds]
        n_block_edges = sum(len(part) for part in parts)
        connectors = np.array(
            [(bounds[j][1], bounds[j + 1][0]) for j in range(k - 1)], dtype=np.int64
        ).reshape(-1, 2)

        articulation: list[int] = []
        for tail, head in connectors.tolist():
            for v in (tail, head):
                if v not in (0, spec.n - 1) and (not articulation or articulation[-1] != v):
                    articulation.append(v)

        return self.finish(
            spec,
            rng,
            np.concatenate([*parts, connectors]),
            planted_positions=range(n_block_edges, n_block_edges + k - 1),
            planted_articulation=articulation,
        )

    def _block(self, rng: np.random.Generator, entry: int, exit: int, density: float) -> np.ndarray:
        size = exit - entry + 1
        if size == 1:
            return np.empty((0, 2), dtype=np.int64)

        inner = rng.permutation(np.arange(entry + 1, exit, dtype=np.int64)).tolist()
        half = (len(inner) + 1) // 2
        routes = [
            self.chain([entry, *inner[:half], exit]),
            self.chain([entry, *inner[half:], exit]),
            self.chain([exit, entry]),
        ]
        extra = self.random_pairs(rng, int(round(density * size)), entry, exit + 1)
        return np.concatenate([*routes, extra])
