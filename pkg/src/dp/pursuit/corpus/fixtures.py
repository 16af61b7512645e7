"""
Named graphs with a fixed vertex numbering.

- path(n): 0-1-...-(n-1)
- cycle(n): path(n) plus the edge (n-1)-0, n >= 3
- complete(n), complete_bipartite(a, b): sides 0..a-1 and a..a+b-1
- star(n): K_{1,n} with centre 0
- sun3: inner triangle 0,1,2; corner 3 on edge 01, 4 on 12, 5 on 02
- two_triangles_shared_edge: triangles 012 and 123 (the diamond)
- gk(k): x=0, y=1, u=2, v=3, u_i=3+i and v_i=3+k+i for i=1..k
"""
import re
from dataclasses import dataclass
from typing import Tuple

from ..errors import GraphValidationError
from ..graph.core import Graph, build


@dataclass(frozen=True)
class FixtureId:
    name: str
    params: Tuple[int, ...] = ()

    def __str__(self):
        if not self.params:
            return self.name
        return "%s(%s)" % (self.name, ",".join(map(str, self.params)))

    @classmethod
    def parse(cls, text: str) -> "FixtureId":
        match = re.fullmatch(r"\s*([a-z_0-9]+)\s*(?:\(([\d,\s]*)\))?\s*",
                             text)
        if match is None:
            raise GraphValidationError("bad fixture id %r" % text)
        params = tuple(int(p) for p in (match.group(2) or "").split(",")
                       if p.strip())
        return cls(match.group(1), params)


def path(n):
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise GraphValidationError("a cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise GraphValidationError("both sides need a vertex")
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n):
    return complete_bipartite(1, n)


def sun3():
    return build(6, [(0, 1), (1, 2), (0, 2),
                     (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)])


def two_triangles_shared_edge():
    return build(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def gk(k):
    """Graph in the witness game class for k but not for k + 1."""
    if k < 1:
        raise GraphValidationError("gk needs k >= 1")
    x, y, u, v = 0, 1, 2, 3
    us = [3 + i for i in range(1, k + 1)]
    vs = [3 + k + i for i in range(1, k + 1)]
    n = 2 * k + 4
    edges = set()

    def add(a, b):
        edges.add((min(a, b), max(a, b)))

    for w in range(n):
        if w not in (x, v):
            add(x, w)
        if w not in (y, u):
            add(y, w)
    for i in range(k - 1):
        add(us[i], us[i + 1])
        add(us[i], vs[i + 1])
        add(vs[i], vs[i + 1])
        add(vs[i], us[i + 1])
    for w in (us[0], vs[0]):
        add(u, w)
    for w in (us[-1], vs[-1]):
        add(v, w)
    return build(n, sorted(edges))


fixture_dict = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "sun3": sun3,
    "two_triangles_shared_edge": two_triangles_shared_edge,
    "gk": gk,
}


def fixture(fixture_id) -> Graph:
    if isinstance(fixture_id, str):
        fixture_id = FixtureId.parse(fixture_id)
    try:
        factory = fixture_dict[fixture_id.name]
    except KeyError:
        raise GraphValidationError("unknown fixture %r" % fixture_id.name)
    if any(p < 1 for p in fixture_id.params):
        raise GraphValidationError("fixture parameters must be positive")
    try:
        return factory(*fixture_id.params)
    except TypeError:
        raise GraphValidationError("wrong parameter count for %s"
                                   % fixture_id.name)
