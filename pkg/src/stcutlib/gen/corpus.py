from typing import Iterator

from .gen_spec import FamilyName, GenSpec, make_rng


def corpus_specs(
    count: int,
    seed: int = 0,
    family: FamilyName = "random_digraph",
    n_range: tuple[int, int] = (2, 12),
    density_range: tuple[float, float] = (0.5, 3.0),
) -> Iterator[GenSpec]:
    """`count` specs with n and density drawn uniformly from the given ranges.

    The draws come from their own Philox stream keyed by `seed`; instance i
    is generated with seed ``seed + i``.
    """
    rng = make_rng(seed)
    for i in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        density = float(rng.uniform(*density_range))
        yield GenSpec(family, n=n, density=round(density, 3), seed=seed + i)
