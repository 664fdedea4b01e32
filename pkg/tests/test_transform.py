import pytest

from stcutlib.errors import PathNotInGraph
from stcutlib.gen import GenSpec, generate
from stcutlib.pathfind import NoPath, StPath, find_st_path
from stcutlib.transform import BridgeTransform, SplitTransform, bridge_transform, split_transform


def test_bridge_transform_of_diamond(diamond):
    bt = bridge_transform(diamond, find_st_path(diamond, 0, 3))
    assert set(bt.graph.edge_pairs()) == {(0, 2), (2, 3), (1, 0), (3, 1)}
    assert bt.graph.m == diamond.m
    assert bt.origin.tolist() == [2, 3, -1, -1]
    assert dict(bt.reversed_of) == {2: 0, 3: 1}
    assert (bt.source, bt.sink) == (0, 3)


def test_bridge_transform_keeps_parallel_twin_forward(parallel_pair):
    bt = bridge_transform(parallel_pair, find_st_path(parallel_pair, 0, 1))
    assert bt.graph.edge_pairs() == [(0, 1), (1, 0)]


def test_bridge_transform_rejects_foreign_path(diamond, chain):
    path = find_st_path(diamond, 0, 3)
    with pytest.raises(PathNotInGraph):
        bridge_transform(chain, path)


def test_split_transform_of_chain(chain):
    st = split_transform(chain, find_st_path(chain, 0, 2), 0, 2)
    # 0₁ = 3, 1₁ = 4, 2₁ = 5
    assert st.graph.n == 6
    assert st.graph.m == chain.m + 2 + 3
    assert st.graph.edge_pairs() == [
        (3, 1), (4, 2),          # rewired originals
        (1, 3), (2, 4),          # reversed path edges
        (3, 0), (4, 1), (5, 2),  # reversed internal edges
    ]
    assert (st.source, st.sink) == (0, 5)
    assert st.path.node_seq == (0, 3, 1, 4, 2, 5)
    assert st.path.edge_seq == (4, 0, 5, 1, 6)
    assert dict(st.internal_edge_of) == {0: 4, 1: 5, 2: 6}
    assert st.is_internal(5) and not st.is_internal(0)


def test_split_keeps_in_edges_on_x0_and_out_edges_on_x1(six_node):
    path = find_st_path(six_node, 0, 5)
    st = split_transform(six_node, path, 0, 5)
    g = st.graph
    for x in path.node_seq:
        x1 = st.split_out[x]
        originals_out = [e for e in g.out_adj(x1).tolist() if e < six_node.m]
        assert originals_out == six_node.out_adj(x).tolist()
        assert [e for e in g.out_adj(x).tolist() if e < six_node.m] == []
    # node 2 is off the path and untouched
    assert st.split_out.get(2) is None
    assert g.out_adj(2).tolist() == six_node.out_adj(2).tolist()


def test_split_transform_checks_terminals(chain):
    with pytest.raises(PathNotInGraph):
        split_transform(chain, find_st_path(chain, 0, 1), 0, 2)


@pytest.mark.parametrize("seed", range(20))
def test_restore_round_trips(seed):
    g, s, t, _ = generate(GenSpec("random_digraph", n=9, density=2.0, seed=seed))
    path = find_st_path(g, s, t)
    assert not isinstance(path, NoPath)

    bt = bridge_transform(g, path)
    assert bt.restore().edge_pairs() == g.edge_pairs()

    st = split_transform(g, path, s, t)
    restored = st.restore()
    assert restored.n == g.n
    assert restored.edge_pairs() == g.edge_pairs()
    assert st.graph.m == g.m + len(path) + len(path.node_seq)


def test_both_rewrites_satisfy_the_protocol(chain):
    path = find_st_path(chain, 0, 2)
    for tg in (bridge_transform(chain, path), split_transform(chain, path, 0, 2)):
        assert isinstance(tg, (BridgeTransform, SplitTransform))
        assert isinstance(tg.path, StPath)
        assert tg.path.source == tg.source and tg.path.sink == tg.sink


def test_split_transform_rejects_foreign_path(diamond, chain):
    # edges 0 and 1 chain in both graphs but end at different nodes
    path = find_st_path(diamond, 0, 3)
    with pytest.raises(PathNotInGraph) as info:
        split_transform(chain, path, 0, 2)
    assert info.value.edge_id == 1


def test_split_rule_holds_on_random_graphs(random_corpus):
    for g, s, t, _ in random_corpus:
        path = find_st_path(g, s, t)
        if isinstance(path, NoPath) or s == t:
            continue
        st = split_transform(g, path, s, t)
        pairs = st.graph.edge_pairs()
        counts = {}
        for pair in pairs:
            counts[pair] = counts.get(pair, 0) + 1

        for x in path.node_seq:
            assert all(e >= g.m for e in st.graph.out_adj(x).tolist())

        internal = set(st.node_of_internal)
        for e, (u, v) in zip(st.path.edge_seq, zip(st.path.node_seq, st.path.node_seq[1:])):
            if e in internal:
                assert counts.get((v, u), 0) >= 1
                assert (u, v) not in counts
            else:
                assert counts.get((u, v), 0) >= 1
                assert counts.get((v, u), 0) >= 1
