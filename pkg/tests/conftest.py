import pytest

from stcutlib.gen import corpus_specs, generate
from stcutlib.graph import DirectedGraph, build_graph

SIX_NODE_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (3, 5)]


@pytest.fixture
def chain() -> DirectedGraph:
    """0 -> 1 -> 2, s = 0, t = 2."""
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def diamond() -> DirectedGraph:
    """0 -> 1 -> 3 and 0 -> 2 -> 3, edges in that order; s = 0, t = 3."""
    return build_graph(4, [(0, 1), (1, 3), (0, 2), (2, 3)])


@pytest.fixture
def six_node() -> DirectedGraph:
    """One bridge (0, 1) and articulation points 1 and 3 between 0 and 5."""
    return build_graph(6, SIX_NODE_EDGES)


@pytest.fixture
def parallel_pair() -> DirectedGraph:
    return build_graph(2, [(0, 1), (0, 1)])


@pytest.fixture(scope="session")
def random_corpus():
    """Small deterministic corpus of random instances with n in [2, 12]."""
    return [generate(spec) for spec in corpus_specs(150, seed=7)]

