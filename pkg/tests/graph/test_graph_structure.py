import networkx as nx
import pytest
from hypothesis import given, settings

from dp.pursuit.errors import DisconnectedGraphError, EmptyVertexSetError
from dp.pursuit.graph import (bipartition, blocks_and_articulations, build,
                              components, dominating_vertex, is_connected)
from graph_strategies import connected_graphs

P3 = build(3, [(0, 1), (1, 2)])
C4 = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = build(5, [(i, (i + 1) % 5) for i in range(5)])
K4 = build(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def test_connectivity():
    assert is_connected(P3)
    assert is_connected(K4)
    empty = build(2, [])
    assert not is_connected(empty)
    assert components(empty) == [(0,), (1,)]


def test_components_of_an_induced_subgraph():
    # C4 minus vertices 0 and 2 falls apart
    assert components(C4, within=0b1010) == [(1,), (3,)]
    assert components(C4, within=0b0111) == [(0, 1, 2)]
    assert components(C4, within=0) == []
    assert components(build(0, [])) == []
    assert is_connected(build(0, []))


def test_bipartition():
    assert bipartition(C4) == ((0, 2), (1, 3))
    assert bipartition(C5) is None
    assert bipartition(build(4, [(0, 1), (1, 2), (2, 3)])) == ((0, 2), (1, 3))


def test_blocks():
    tree = blocks_and_articulations(P3)
    assert tree.blocks == [(0, 1), (1, 2)]
    assert tree.articulations == (1,)
    assert blocks_and_articulations(K4).blocks == [(0, 1, 2, 3)]
    assert blocks_and_articulations(K4).articulations == ()
    bowtie = build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    tree = blocks_and_articulations(bowtie)
    assert tree.blocks == [(0, 1, 2), (0, 3, 4)]
    assert tree.articulations == (0,)
    assert tree.blocks_of(0) == [0, 1]


def test_blocks_need_connected_graph():
    with pytest.raises(DisconnectedGraphError):
        blocks_and_articulations(build(3, [(0, 1)]))


def test_dominating_vertex():
    assert dominating_vertex(K4, range(4)) == 0
    assert dominating_vertex(C4, range(4)) is None
    star = build(4, [(0, 1), (0, 2), (0, 3)])
    assert dominating_vertex(star, range(4)) == 0
    assert dominating_vertex(C4, [1, 2]) == 1
    with pytest.raises(EmptyVertexSetError):
        dominating_vertex(K4, [])


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=2, max_n=8))
def test_block_cut_tree_is_a_tree(g):
    tree = blocks_and_articulations(g)
    for u, v in g.edges():
        assert sum(1 for b in tree.blocks if u in b and v in b) == 1
    for i, a in enumerate(tree.blocks):
        for b in tree.blocks[i + 1:]:
            assert len(set(a) & set(b)) <= 1
    shared = {v for v in range(g.n) if len(tree.blocks_of(v)) > 1}
    assert shared == set(tree.articulations)
    bc = nx.Graph()
    bc.add_nodes_from(("b", i) for i in range(len(tree.blocks)))
    bc.add_nodes_from(("a", a) for a in tree.articulations)
    bc.add_edges_from((("b", i), ("a", a)) for i, a in tree.tree_edges)
    assert len(tree.tree_edges) == \
        len(tree.blocks) + len(tree.articulations) - 1
    assert nx.is_tree(bc)
