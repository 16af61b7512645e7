import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dp.pursuit.corpus import fixture
from dp.pursuit.errors import (DisconnectedGraphError, GameSpecError,
                               GuardError, NotBipartiteError)
from dp.pursuit.dismantling import (Family, bidismantle, bipartite_dismantle,
                                    mno_order, random_ss_dismantle,
                                    recognizer_dict, ss_dismantle,
                                    ss_dismantle_local, strong_bidismantle,
                                    verify_certificate)
from dp.pursuit.game import Winner, solve_capture, solve_visible
from dp.pursuit.graph import UNBOUNDED, build
from graph_strategies import connected_bipartite_graphs, connected_graphs

K4 = fixture("complete(4)")
C4 = fixture("cycle(4)")
C5 = fixture("cycle(5)")
C6 = fixture("cycle(6)")
P4 = fixture("path(4)")
SUN3 = fixture("sun3")
TREE = build(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)])


@pytest.mark.parametrize("speeds", [(1, 1), (2, 1), (UNBOUNDED, 1), (3, 2)])
def test_complete_graph_always_dismantles(speeds):
    cert = ss_dismantle(K4, *speeds)
    assert cert is not None
    assert cert.family == Family.SS_DISMANTLE
    assert len(cert.eliminators) == 3
    assert verify_certificate(K4, cert)


def test_ss_examples():
    assert ss_dismantle(C4, 1, 1) is None
    assert ss_dismantle(SUN3, 2, 1) is None
    assert ss_dismantle(SUN3, 1, 1) is not None
    cert = ss_dismantle(TREE, UNBOUNDED, 1)
    assert cert is not None
    assert verify_certificate(TREE, cert)
    assert cert.to_dict()["params"] == {"s": "inf", "s_prime": 1}


def test_ss_dismantle_needs_connected_graph():
    with pytest.raises(DisconnectedGraphError):
        ss_dismantle(build(3, [(0, 1)]), 1, 1)


def test_empty_graph_has_an_empty_order():
    empty = build(0, [])
    cert = ss_dismantle(empty, 1, 1)
    assert cert.order == () and cert.eliminators == ()
    assert verify_certificate(empty, cert)
    assert ss_dismantle(build(1, []), 2, 1).order == (0,)


def test_local_variant_agrees_on_small_examples():
    assert ss_dismantle_local(K4, 1) is not None
    assert ss_dismantle_local(C4, 1) is None
    assert ss_dismantle_local(SUN3, 2) is None
    assert ss_dismantle_local(SUN3, 1) is not None


def test_mno_examples():
    cert = mno_order(fixture("star(3)"))
    assert cert is not None
    assert cert.eliminators[:2] == (0, 0)
    assert verify_certificate(fixture("star(3)"), cert)
    assert mno_order(SUN3) is None
    assert mno_order(C4) is None


def test_bipartite_examples():
    k33 = fixture("complete_bipartite(3,3)")
    cert = bipartite_dismantle(k33)
    assert cert is not None
    assert verify_certificate(k33, cert)
    assert bipartite_dismantle(C6) is None
    cert = bipartite_dismantle(P4)
    assert cert is not None
    assert len(cert.order) == 4
    assert len(cert.eliminators) == 2
    assert P4.adjacent(*cert.order[-2:])


def test_bipartite_refuses_odd_cycles():
    with pytest.raises(NotBipartiteError):
        bipartite_dismantle(C5)
    # the refusal is a guard
    with pytest.raises(GuardError):
        bipartite_dismantle(fixture("complete(3)"))


def test_bidismantle_examples():
    cert = bidismantle(SUN3, 2)
    assert cert is not None
    assert cert.params == {"k": 2}
    assert verify_certificate(SUN3, cert)
    for k in (1, 2, 5):
        assert bidismantle(fixture("complete(3)"), k) is not None
    assert bidismantle(C5, 2) is None
    with pytest.raises(GameSpecError):
        bidismantle(SUN3, 0)


def test_strong_bidismantle_examples():
    star = fixture("star(3)")
    cert = strong_bidismantle(star)
    assert cert is not None
    assert cert.eliminators[0] == (0, 0)
    assert strong_bidismantle(K4) is not None
    assert strong_bidismantle(C5) is None


def test_backtracking_guard(monkeypatch):
    from dp.pursuit.config import config
    monkeypatch.setitem(config, "backtrack_max_n", 4)
    with pytest.raises(GuardError):
        bidismantle(C5, 2)
    assert bidismantle(C5, 2, force=True) is None


def test_recognizer_dict_covers_every_family():
    assert set(recognizer_dict) == {family.value for family in Family}
    cert = recognizer_dict["ss"](SUN3, s=1, s_prime=1)
    assert cert.params == {"s": 1, "s_prime": 1}
    assert recognizer_dict["bi"](SUN3, k=2).family == Family.BIDISMANTLE


@settings(max_examples=50, deadline=None)
@given(connected_graphs(max_n=7), st.sampled_from([(1, 1), (2, 1),
                                                   (3, 2), (UNBOUNDED, 1)]))
def test_ss_dismantling_matches_the_game(g, speeds):
    cert = ss_dismantle(g, *speeds)
    verdict = solve_visible(g, *speeds).verdict
    assert (cert is not None) == (verdict == Winner.COP)
    if cert is not None:
        assert verify_certificate(g, cert)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=7), st.integers(0, 1000))
def test_elimination_choices_are_confluent(g, seed):
    assert (random_ss_dismantle(g, 2, 1, seed) is None) == \
        (ss_dismantle(g, 2, 1) is None)


@settings(max_examples=40, deadline=None)
@given(connected_bipartite_graphs(min_n=2, max_n=7))
def test_bipartite_dismantling_matches_capture_game(g):
    cert = bipartite_dismantle(g)
    assert (cert is not None) == (solve_capture(g, 1).verdict == Winner.COP)
    if cert is not None:
        assert verify_certificate(g, cert)
