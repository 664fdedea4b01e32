from .corpus import corpus_specs
from .gen_spec import FAMILY_NAMES, GeneratedInstance, GenSpec, make_rng
from .family import Family
from .layered_dag import LayeredDag
from .parallel_braid import ParallelBraid
from .planted_chain import PlantedChain, planted_chain_spec
from .random_digraph import RandomDigraph

FAMILIES: dict[str, Family] = {
    family.name: family
    for family in (RandomDigraph(), LayeredDag(), PlantedChain(), ParallelBraid())
}
assert set(FAMILIES) == set(FAMILY_NAMES)


def generate(spec: GenSpec) -> GeneratedInstance:
    """Generate the instance described by `spec`; a pure function of `spec`."""
    return FAMILIES[spec.family](spec, make_rng(spec.seed))


__all__ = [
    "FAMILIES",
    "FAMILY_NAMES",
    "Family",
    "GenSpec",
    "GeneratedInstance",
    "LayeredDag",
    "ParallelBraid",
    "PlantedChain",
    "RandomDigraph",
    "corpus_specs",
    "generate",
    "make_rng",
    "planted_chain_spec",
]
