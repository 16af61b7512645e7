import pytest

from dp.pursuit.corpus import FixtureId, fixture, fixture_dict
from dp.pursuit.errors import GraphValidationError
from dp.pursuit.graph import build


def test_sun3():
    g = fixture("sun3")
    assert g.n == 6
    assert len(g.edges()) == 9
    assert [g.degree(v) for v in range(6)] == [4, 4, 4, 2, 2, 2]


def test_gk():
    g = fixture("gk(2)")
    assert g.n == 8
    assert len(g.edges()) == 19
    x, y, u, v = 0, 1, 2, 3
    assert not g.adjacent(x, v)
    assert not g.adjacent(y, u)
    assert all(g.adjacent(x, w) for w in range(g.n) if w not in (x, v))
    assert all(g.adjacent(y, w) for w in range(g.n) if w not in (y, u))
    assert fixture("gk(1)").n == 6
    assert fixture("gk(3)").n == 10


def test_small_families():
    assert fixture("cycle(4)") == build(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert fixture("path(1)").n == 1
    assert len(fixture("complete(5)").edges()) == 10
    assert fixture("star(3)") == fixture("complete_bipartite(1,3)")
    assert fixture(" complete_bipartite ( 2, 3 ) ").edges() == (
        (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))
    assert len(fixture("two_triangles_shared_edge").edges()) == 5


def test_fixture_ids():
    fid = FixtureId.parse("gk(3)")
    assert fid == FixtureId("gk", (3,))
    assert str(fid) == "gk(3)"
    assert str(FixtureId.parse("sun3")) == "sun3"
    assert fixture(fid) == fixture("gk(3)")


def test_fixtures_are_deterministic():
    for name in ("sun3", "gk(2)", "cycle(5)", "complete_bipartite(2,2)"):
        assert fixture(name).edges() == fixture(name).edges()


@pytest.mark.parametrize("name", [
    "gk(0)", "path(0)", "cycle(2)", "wheel(5)", "sun3(2)", "path",
    "complete_bipartite(2)", "gk(-1)", "gk(x)",
])
def test_bad_fixture_ids(name):
    with pytest.raises(GraphValidationError):
        fixture(name)


def test_every_family_is_registered():
    assert set(fixture_dict) == {
        "path", "cycle", "complete", "complete_bipartite", "star", "sun3",
        "two_triangles_shared_edge", "gk"}
