"""Full-size property runs; ``pytest -m slow`` selects them."""

import time

import pytest

from stcutlib.analysis import VerifyParams, verify_instance
from stcutlib.gen import corpus_specs, generate, planted_chain_spec
from stcutlib.oracle import enumerate_st_paths, oracle_order
from stcutlib.stbridge import CutKind, SearchParams, st_bridges
from stcutlib.stcut import st_articulation_points

pytestmark = pytest.mark.slow


def test_thousand_graph_corpus_matches_the_oracle():
    start = time.perf_counter()
    params = VerifyParams(threads=1)
    failed = []
    for spec in corpus_specs(1_000, seed=2024):
        instance = generate(spec)
        verdict = verify_instance(instance.graph, 0, spec.n - 1, params, label=str(spec))
        if not verdict.passed:
            failed.append(verdict)
    assert failed == []
    assert time.perf_counter() - start < 60


def test_order_is_the_same_on_every_path():
    checked = 0
    for spec in corpus_specs(3_000, seed=99):
        if checked == 300:
            break
        g, s, t, _ = generate(spec)
        paths = enumerate_st_paths(g, s, t, limit=10_000)
        if len(paths) < 2:
            continue
        checked += 1
        bridges = st_bridges(g, s, t)
        cuts = st_articulation_points(g, s, t)
        assert oracle_order(g, s, t, bridges.sequence, enumeration=paths) == bridges.sequence
        assert (
            oracle_order(g, s, t, cuts.sequence, CutKind.ARTICULATION, enumeration=paths)
            == cuts.sequence
        )
    assert checked == 300


def test_queue_discipline_on_the_full_corpus():
    for spec in corpus_specs(1_000, seed=2024):
        g, s, t, _ = generate(spec)
        for search in (st_bridges, st_articulation_points):
            fifo = search(g, s, t, SearchParams(queue="fifo"))
            lifo = search(g, s, t, SearchParams(queue="lifo"))
            assert fifo.sequence == lifo.sequence
            assert fifo.comp.tolist() == lifo.comp.tolist()


@pytest.mark.parametrize("k", [2, 5, 20])
def test_planted_chain_at_scale(k):
    instance = generate(planted_chain_spec(k, block=500, seed=k, density=3.0))
    assert st_bridges(instance.graph, 0, instance.sink).sequence == instance.planted_bridges
