import logging

import pytest

from stcutlib.errors import OrderViolation, PreconditionUnreachable
from stcutlib.graph import build_graph
from stcutlib.oracle import (
    enumerate_st_paths,
    oracle_components,
    oracle_cut_partition,
    oracle_order,
    oracle_report,
    oracle_st_articulation,
    oracle_st_bridges,
)
from stcutlib.pathfind import NoPath
from stcutlib.stbridge import CutKind, st_bridges
from stcutlib.stcut import st_articulation_points


def test_oracle_sets(diamond, six_node):
    assert oracle_st_bridges(diamond, 0, 3) == frozenset()
    assert oracle_st_bridges(six_node, 0, 5) == {0}
    assert oracle_st_articulation(diamond, 0, 3) == frozenset()
    assert oracle_st_articulation(six_node, 0, 5) == {1, 3}


def test_oracle_threads_give_the_same_answer(six_node):
    assert oracle_st_bridges(six_node, 0, 5, threads=4) == oracle_st_bridges(six_node, 0, 5)
    assert oracle_st_articulation(six_node, 0, 5, threads=4) == {1, 3}


def test_oracle_requires_a_path():
    g = build_graph(3, [(0, 1)])
    with pytest.raises(PreconditionUnreachable):
        oracle_st_bridges(g, 0, 2)


def test_oracle_components(six_node):
    assert oracle_components(six_node, 0, 5, [0]).tolist() == [1, 2, 2, 2, 2, 2]
    comp = oracle_components(six_node, 0, 5, [1, 3], CutKind.ARTICULATION)
    assert comp.tolist() == [1, 1, 2, 2, 3, 3]


def test_path_enumeration(diamond, six_node):
    paths = enumerate_st_paths(diamond, 0, 3)
    assert paths.node_paths == ((0, 1, 3), (0, 2, 3))
    assert not paths.truncated

    paths = enumerate_st_paths(six_node, 0, 5)
    assert len(paths) == 4
    assert all(0 in edges for edges in paths.edge_paths)
    assert all(1 in nodes and 3 in nodes for nodes in paths.node_paths)


def test_parallel_edges_give_distinct_paths(parallel_pair):
    assert enumerate_st_paths(parallel_pair, 0, 1).edge_paths == ((0,), (1,))


def test_path_enumeration_truncates(six_node, caplog):
    with caplog.at_level(logging.WARNING, logger="stcutlib.oracle"):
        paths = enumerate_st_paths(six_node, 0, 5, limit=2)
    assert len(paths) == 2
    assert paths.truncated
    assert "truncated" in caplog.text


def test_order_on_every_path(six_node):
    assert oracle_order(six_node, 0, 5, {1, 3}, CutKind.ARTICULATION) == (1, 3)
    assert oracle_order(six_node, 0, 5, {0}) == (0,)


def test_order_violation_for_a_non_cut(diamond):
    # edge 0 lies on the first path only
    with pytest.raises(OrderViolation):
        oracle_order(diamond, 0, 3, {0})


def test_cut_partition():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    before, after = oracle_cut_partition(g, 0, 4, 2, [0, 1, 3])
    assert before == {0, 1}
    assert after == {3}

    before, after = oracle_cut_partition(g, 0, 4, 2, [1, 2, 3], CutKind.ARTICULATION)
    assert (before, after) == ({1}, {3})


def test_cut_partition_matches_the_sequence(random_corpus):
    for g, s, t, _ in random_corpus:
        report = st_bridges(g, s, t)
        if isinstance(report, NoPath):
            continue
        seq = report.sequence
        for i, b in enumerate(seq):
            before, after = oracle_cut_partition(g, s, t, b, seq)
            assert before == set(seq[:i])
            assert after == set(seq[i + 1 :])


def test_algorithm_matches_the_oracle(random_corpus):
    for g, s, t, _ in random_corpus:
        oracle = oracle_report(g, s, t)
        bridges = st_bridges(g, s, t)
        cuts = st_articulation_points(g, s, t)
        assert bridges.sequence == oracle.bridge_order
        assert cuts.sequence == oracle.articulation_order
        assert bridges.comp.tolist() == oracle.comp_bridge.tolist()
        assert cuts.comp.tolist() == oracle.comp_artic.tolist()


def test_source_equals_sink(diamond):
    oracle = oracle_report(diamond, 1, 1)
    assert oracle.bridges == frozenset()
    assert oracle.comp_bridge.tolist() == [0, 1, 0, 0]
