import random
from dataclasses import replace

import pytest
from hypothesis import given, settings

from dp.pursuit.corpus import enumerate_connected, fixture
from dp.pursuit.decomposition import (Decomposition, Kind, big_brother,
                                      big_two_brother, verify_decomposition)
from dp.pursuit.errors import DecompositionError, DisconnectedGraphError
from dp.pursuit.game import Winner, solve_visible
from dp.pursuit.graph import UNBOUNDED, build
from graph_strategies import connected_graphs

SUN3 = fixture("sun3")
TREE = build(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)])


def test_trees_are_big_brother_graphs():
    d = big_brother(TREE)
    assert d is not None
    assert d.kind == Kind.BIG_BROTHER
    assert len(d) == 6
    assert all(len(piece) == 2 for piece in d.pieces)
    assert verify_decomposition(TREE, d)


def test_path_decomposition():
    d = big_brother(fixture("path(3)"))
    assert d.pieces == [(1, 2), (0, 1)]
    assert d.big_brother == [1, 1]
    assert d.small_brother == [None, 1]
    assert d.parent == [-1, 0]
    assert d.path_from_root(1) == [0, 1]
    assert d.depth(1) == 1


def test_complete_graph_is_one_piece():
    k5 = fixture("complete(5)")
    for recognizer in (big_brother, big_two_brother):
        d = recognizer(k5)
        assert d.pieces == [(0, 1, 2, 3, 4)]
        assert d.big_brother == [0]
        assert verify_decomposition(k5, d)


def test_sun3_needs_edge_gates():
    assert big_brother(SUN3) is None
    d = big_two_brother(SUN3)
    assert d is not None
    assert d.pieces == [(0, 1, 2, 4, 5), (0, 1, 3)]
    assert d.big_brother == [2, 0]
    assert d.small_brother == [None, 1]
    assert d.gate(1) == (0, 1)
    assert verify_decomposition(SUN3, d)


def test_two_trees():
    diamond = fixture("two_triangles_shared_edge")
    d = big_two_brother(diamond)
    assert d is not None
    assert verify_decomposition(diamond, d)
    fan = build(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    d = big_two_brother(fan)
    assert d is not None
    assert verify_decomposition(fan, d)


def test_c4_has_no_decomposition():
    assert big_brother(fixture("cycle(4)")) is None
    assert big_two_brother(fixture("cycle(4)")) is None


def test_recognizers_need_connected_graphs():
    with pytest.raises(DisconnectedGraphError):
        big_brother(build(3, [(0, 1)]))
    with pytest.raises(DisconnectedGraphError):
        big_two_brother(build(3, [(0, 1)]))


def test_vertex_gate_with_brother_inside_the_piece():
    # pendant 0 on the triangle 1, 2, 3
    g = build(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    d = Decomposition(kind=Kind.BIG_TWO_BROTHER, pieces=[(0, 1), (1, 2, 3)],
                      big_brother=[0, 2], small_brother=[None, 1],
                      parent=[-1, 0])
    assert verify_decomposition(g, d)


def test_tampered_decompositions_fail():
    d = big_two_brother(SUN3)
    assert not verify_decomposition(SUN3, replace(d, big_brother=[0, 0]))
    assert not verify_decomposition(SUN3, replace(d, small_brother=[None, 2]))
    assert not verify_decomposition(
        SUN3, replace(d, pieces=[(0, 1, 2, 4), (0, 1, 3)]))
    path = fixture("path(3)")
    d = big_brother(path)
    assert not verify_decomposition(path, replace(d, big_brother=[1, 0]))
    # edge gates are not allowed in big brother decompositions
    assert not verify_decomposition(SUN3, replace(
        big_two_brother(SUN3), kind=Kind.BIG_BROTHER))


def test_malformed_decompositions_raise():
    d = big_brother(fixture("path(3)"))
    with pytest.raises(DecompositionError):
        verify_decomposition(fixture("path(3)"), replace(d, parent=[-1, 1]))
    with pytest.raises(DecompositionError):
        verify_decomposition(fixture("path(3)"), replace(d, pieces=[]))
    with pytest.raises(DecompositionError):
        verify_decomposition(fixture("path(3)"),
                             replace(d, small_brother=[None, None]))
    with pytest.raises(DecompositionError):
        Decomposition.from_dict({"kind": "bb"})


def test_dict_form():
    d = big_two_brother(SUN3)
    data = d.to_dict()
    assert data["kind"] == "btb"
    assert data["small_brother"] == [None, 1]
    assert Decomposition.from_dict(data) == d


@settings(max_examples=50, deadline=None)
@given(connected_graphs(max_n=7))
def test_big_brother_graphs_match_the_unbounded_robber_game(g):
    d = big_brother(g)
    if d is not None:
        assert verify_decomposition(g, d)
        assert verify_decomposition(g, d.as_big_two_brother())
        assert big_two_brother(g) is not None
    verdict = solve_visible(g, UNBOUNDED, 1).verdict
    assert (d is not None) == (verdict == Winner.COP)


@settings(max_examples=50, deadline=None)
@given(connected_graphs(max_n=7))
def test_big_two_brother_output_verifies(g):
    d = big_two_brother(g)
    if d is not None:
        assert verify_decomposition(g, d)


def _outside_brother(g, d, rng):
    i = rng.choice([i for i, p in enumerate(d.pieces) if len(p) < g.n])
    brothers = list(d.big_brother)
    brothers[i] = rng.choice([v for v in range(g.n) if v not in d.pieces[i]])
    return replace(d, big_brother=brothers)


def _non_dominating_brother(g, d, rng):
    choices = [(i, v) for i, p in enumerate(d.pieces) for v in p
               if not set(p) <= set(g.neighbors(v)) | {v}]
    if not choices:
        return None
    i, v = rng.choice(choices)
    brothers = list(d.big_brother)
    brothers[i] = v
    return replace(d, big_brother=brothers)


def _small_brother_off_the_gate(g, d, rng):
    choices = []
    for i in range(1, len(d.pieces)):
        earlier = set().union(*d.pieces[:i])
        meet = set(d.pieces[i]) & earlier
        choices += [(i, v) for v in range(g.n) if v not in meet]
    if not choices:
        return None
    i, v = rng.choice(choices)
    small = list(d.small_brother)
    small[i] = v
    return replace(d, small_brother=small)


def _dropped_vertex(g, d, rng):
    counts = [sum(v in p for p in d.pieces) for v in range(g.n)]
    choices = [(i, v) for i, p in enumerate(d.pieces) for v in p
               if counts[v] == 1 and len(p) > 1]
    if not choices:
        return None
    i, v = rng.choice(choices)
    pieces = list(d.pieces)
    pieces[i] = tuple(u for u in pieces[i] if u != v)
    return replace(d, pieces=pieces)


MUTATIONS = [_outside_brother, _non_dominating_brother,
             _small_brother_off_the_gate, _dropped_vertex]


def test_thousand_random_mutations_are_rejected():
    rng = random.Random(5)
    decompositions = []
    for n in (3, 4, 5):
        for g in enumerate_connected(n):
            for d in (big_brother(g), big_two_brother(g)):
                if d is not None and any(len(p) < n for p in d.pieces):
                    decompositions.append((g, d))
    # sun3 brings an edge gate
    decompositions.append((SUN3, big_two_brother(SUN3)))
    rejected = {m.__name__: 0 for m in MUTATIONS}
    while sum(rejected.values()) < 1000:
        g, d = rng.choice(decompositions)
        mutate = rng.choice(MUTATIONS)
        mutated = mutate(g, d, rng)
        if mutated is None:
            continue
        assert not verify_decomposition(g, mutated), (g, mutated)
        rejected[mutate.__name__] += 1
    assert all(count > 0 for count in rejected.values())
