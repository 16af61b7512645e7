import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dp.pursuit.errors import (DuplicateEdgeError, GraphValidationError,
                               PuncturedCenterError, SelfLoopError,
                               VertexRangeError)
from dp.pursuit.graph import (UNBOUNDED, ball, build, format_radius,
                              parse_radius, punctured_ball,
                              two_punctured_ball)
from graph_strategies import connected_graphs

P3 = build(3, [(0, 1), (1, 2)])
C4 = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_build_distances():
    assert P3.dist[0][2] == 2
    assert C4.dist[0][2] == 2
    assert C4.adjacency[0] == (1, 3)
    assert C4.edges() == ((0, 1), (0, 3), (1, 2), (2, 3))


def test_build_rejects_bad_edges():
    with pytest.raises(SelfLoopError):
        build(2, [(0, 0)])
    with pytest.raises(DuplicateEdgeError):
        build(3, [(0, 1), (1, 0)])
    with pytest.raises(VertexRangeError):
        build(2, [(0, 2)])
    # each is a validation error
    with pytest.raises(GraphValidationError):
        build(2, [(1, 1)])


def test_disconnected_distances_are_unbounded():
    g = build(3, [(0, 1)])
    assert g.dist[0][2] == UNBOUNDED
    assert g.dist[0][2] > 10 ** 9


def test_ball():
    assert ball(P3, 0, 1) == (0, 1)
    assert ball(C4, 0, 2) == (0, 1, 2, 3)
    assert ball(P3, 0, UNBOUNDED) == (0, 1, 2)
    assert ball(build(3, [(0, 1)]), 0, UNBOUNDED) == (0, 1)


def test_punctured_ball():
    assert punctured_ball(P3, 0, 2, 1) == (0,)
    assert punctured_ball(C4, 0, 2, 1) == (0, 2, 3)
    assert punctured_ball(P3, 2, UNBOUNDED, 1) == (2,)
    with pytest.raises(PuncturedCenterError):
        punctured_ball(P3, 1, 1, 1)


def test_two_punctured_ball():
    assert two_punctured_ball(C4, 0, 3, 1, 3) == (0,)
    assert two_punctured_ball(C4, 0, 3, 1, 1) == punctured_ball(C4, 0, 3, 1)
    with pytest.raises(PuncturedCenterError):
        two_punctured_ball(C4, 0, 1, 0, 2)


def test_radius_parsing():
    assert parse_radius("inf") == UNBOUNDED
    assert parse_radius("3") == 3
    assert format_radius(UNBOUNDED) == "inf"
    assert format_radius(2) == 2
    with pytest.raises(ValueError):
        parse_radius("-1")


def test_relabel_and_induced():
    g = P3.relabel([2, 0, 1])
    assert g.edges() == ((0, 1), (0, 2))
    sub, names = C4.induced([0, 1, 2])
    assert names == (0, 1, 2)
    assert sub == P3


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=7), st.data())
def test_punctured_ball_properties(g, data):
    if g.n < 2:
        return
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x))
    r = data.draw(st.integers(0, g.n))
    result = set(punctured_ball(g, x, r, y))
    assert x in result
    assert result <= (set(ball(g, x, r)) - {y}) | {x}
    assert result <= set(punctured_ball(g, x, r + 1, y))
    component = nx.node_connected_component(
        nx.restricted_view(g.to_networkx(), [y], []), x)
    assert set(punctured_ball(g, x, UNBOUNDED, y)) == component


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=7))
def test_distances_match_networkx(g):
    lengths = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
    for u in range(g.n):
        for v in range(g.n):
            assert g.dist[u][v] == lengths[u][v]
            assert (g.dist[u][v] == 1) == g.adjacent(u, v)


def test_unbounded_ball_stays_in_its_component():
    g = build(5, [(0, 1), (1, 2), (3, 4)])
    assert ball(g, 0, UNBOUNDED) == (0, 1, 2)
    assert ball(g, 4, UNBOUNDED) == (3, 4)
    assert ball(g, 2, 10) == (0, 1, 2)
    assert punctured_ball(g, 0, UNBOUNDED, 3) == (0, 1, 2)


def test_metric_caches_are_bounded():
    from dp.pursuit.graph import core

    assert core._reach.cache_info().maxsize == core.CACHE_SIZE
    assert core._ball_mask.cache_info().maxsize == core.CACHE_SIZE
    first = build(3, [(0, 1), (1, 2)])
    second = build(3, [(0, 1), (1, 2)])
    assert first.reach(0, 1, within=0b011) == 0b011
    assert second.reach(0, 1, within=0b011) == 0b011
    assert hash(first) == hash(second)
