import numpy as np
import pytest

from stcutlib.errors import EndpointOutOfRange, GraphError, NodeOutOfRange, UnknownEdgeId
from stcutlib.graph import Edge, build_graph, remove_edges_add_edges
from stcutlib.pathfind import reachable_set


def test_edge_ids_follow_input_order(diamond):
    assert diamond.n == 4
    assert diamond.m == 4
    assert diamond.edge(2) == Edge(2, 0, 2)
    assert diamond.edge_pairs() == [(0, 1), (1, 3), (0, 2), (2, 3)]


def test_adjacency_is_ascending_by_edge_id(diamond):
    assert diamond.out_adj(0).tolist() == [0, 2]
    assert diamond.in_adj(3).tolist() == [1, 3]
    assert diamond.out_degree(0) == 2
    assert diamond.in_degree(0) == 0


def test_arrays_are_read_only(diamond):
    with pytest.raises(ValueError):
        diamond.tails[0] = 3


def test_multigraph_keeps_parallel_edges_and_self_loops():
    g = build_graph(2, [(0, 1), (0, 1), (1, 1)])
    assert g.out_adj(0).tolist() == [0, 1]
    assert g.edge(2).is_self_loop
    assert g.in_adj(1).tolist() == [0, 1, 2]


def test_empty_graph():
    g = build_graph(3, [])
    assert g.m == 0
    assert g.out_adj(1).tolist() == []


def test_endpoint_out_of_range_names_the_edge():
    with pytest.raises(EndpointOutOfRange) as info:
        build_graph(3, [(0, 1), (1, 3)])
    assert info.value.edge_index == 1
    assert info.value.endpoint == 3


def test_graph_errors_are_value_errors():
    assert issubclass(GraphError, ValueError)


def test_validate_node_and_edge(diamond):
    with pytest.raises(NodeOutOfRange):
        diamond.validate_node(4)
    with pytest.raises(UnknownEdgeId):
        diamond.edge(4)


def test_remove_and_add_renumbers_densely(diamond):
    edited = remove_edges_add_edges(diamond, [1], [(3, 1)])
    g = edited.graph
    assert g.edge_pairs() == [(0, 1), (0, 2), (2, 3), (3, 1)]
    assert edited.origin.tolist() == [0, 2, 3, -1]
    assert list(edited.added_ids()) == [3]


def test_removing_one_diamond_edge_keeps_sink_reachable(diamond):
    g = remove_edges_add_edges(diamond, [1], []).graph
    assert 3 in reachable_set(g, 0)


def test_add_nodes_extends_the_node_range(chain):
    edited = remove_edges_add_edges(chain, [], [(2, 3)], add_nodes=1)
    assert edited.graph.n == 4
    with pytest.raises(EndpointOutOfRange):
        remove_edges_add_edges(chain, [], [(2, 3)])


def test_remove_unknown_edge(chain):
    with pytest.raises(UnknownEdgeId):
        remove_edges_add_edges(chain, [5], [])


def test_edit_leaves_input_untouched(diamond):
    before = np.array(diamond.heads)
    remove_edges_add_edges(diamond, [0, 1], [(1, 0)])
    assert diamond.heads.tolist() == before.tolist()


def test_endpoint_beyond_int64_is_out_of_range():
    with pytest.raises(EndpointOutOfRange) as info:
        build_graph(3, [(0, 1), (0, 2**70)])
    assert info.value.edge_index == 1


@pytest.mark.parametrize("n", [-1, 2**63, 10**20])
def test_node_count_outside_int64_is_rejected(n):
    with pytest.raises(GraphError):
        build_graph(n, [])


def test_out_degree_matches_input_pairs(random_corpus):
    for g, _, _, _ in random_corpus:
        pairs = g.edge_pairs()
        for u in range(g.n):
            out = g.out_adj(u).tolist()
            assert len(out) == sum(1 for tail, _ in pairs if tail == u)
            assert out == sorted(out)
