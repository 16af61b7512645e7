"""
Graph representation and metric primitives.

Vertices are the dense identifiers 0..n-1. Vertex sets are exchanged as
ascending tuples on the public surface and as integer bitmasks inside
the solvers (bit v set <=> vertex v in the set).
"""
import math
from collections import deque
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from ..errors import (DuplicateEdgeError, PuncturedCenterError,
                      SelfLoopError, VertexRangeError)
from ..utils import bits_to_tuple, iter_bits

UNBOUNDED = math.inf
Radius = Union[int, float]


def parse_radius(value: Union[str, int, float]) -> Radius:
    """Read a radius from the command line or JSON ("inf" is unbounded)."""
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity", "unbounded"):
            return UNBOUNDED
        value = int(value)
    if value == UNBOUNDED:
        return UNBOUNDED
    if value < 0 or int(value) != value:
        raise ValueError("radius must be a non-negative integer or 'inf'")
    return int(value)


def format_radius(value: Radius) -> Union[int, str]:
    return "inf" if value == UNBOUNDED else int(value)


class Graph:
    """Immutable simple undirected graph with all-pairs hop distances."""

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        self._n = n
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self._open = tuple(sum(1 << u for u in nbrs)
                           for nbrs in self._adjacency)
        self._closed = tuple(mask | (1 << v)
                             for v, mask in enumerate(self._open))
        self._full = (1 << n) - 1
        self._dist = tuple(self._bfs_row(v) for v in range(n))
        self._edges = tuple((u, v) for u in range(n)
                            for v in self._adjacency[u] if u < v)
        self._hash = hash((n, self._edges))

    def _bfs_row(self, source: int) -> Tuple[Radius, ...]:
        row: List[Radius] = [UNBOUNDED] * self._n
        row[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in self._adjacency[v]:
                if row[u] == UNBOUNDED:
                    row[u] = row[v] + 1
                    queue.append(u)
        return tuple(row)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adjacency

    @property
    def dist(self) -> Tuple[Tuple[Radius, ...], ...]:
        return self._dist

    @property
    def full_mask(self) -> int:
        return self._full

    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return self._edges

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._open[u] >> v & 1)

    def open_mask(self, v: int) -> int:
        return self._open[v]

    def closed_mask(self, v: int) -> int:
        return self._closed[v]

    def ball_mask(self, x: int, r: Radius) -> int:
        return _ball_mask(self, x, r)

    def reach(self, x: int, r: Radius, removed: int = 0,
              within: Optional[int] = None) -> int:
        """Vertices joined to x by a path of length <= r.

        The path may only use vertices of `within` (default: all) that
        are not in `removed`; x itself is always part of the result.
        """
        return _reach(self, x, r, removed, within)

    def diameter(self) -> Radius:
        if self._n == 0:
            return 0
        return max(max(row) for row in self._dist)

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed permutation[v]."""
        return build(self._n, [(permutation[u], permutation[v])
                               for u, v in self._edges])

    def induced(self, vertices: Iterable[int]) -> Tuple["Graph", Tuple[int, ...]]:
        """Induced subgraph relabeled 0..m-1, with the original names."""
        names = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(names)}
        return build(len(names), [(index[u], index[v])
                                  for u, v in self._edges
                                  if u in index and v in index]), names

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self._edges)
        return graph

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Graph(n=%d, edges=%s)" % (self._n, list(self._edges))


# Bounded caches shared by all graphs; equal graphs share entries.
CACHE_SIZE = 1 << 16


@lru_cache(maxsize=CACHE_SIZE)
def _ball_mask(g: Graph, x: int, r: Radius) -> int:
    row = g.dist[x]
    mask = 0
    for v in range(g.n):
        if row[v] != UNBOUNDED and row[v] <= r:
            mask |= 1 << v
    return mask


@lru_cache(maxsize=CACHE_SIZE)
def _reach(g: Graph, x: int, r: Radius, removed: int,
           within: Optional[int]) -> int:
    allowed = (g.full_mask if within is None else within) & ~removed
    seen = 1 << x
    frontier = seen
    depth = 0
    while frontier and depth < r:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.open_mask(v)
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
        depth += 1
    return seen


def build(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise VertexRangeError("vertex count must be non-negative, got %d"
                               % n)
    adjacency: List[set] = [set() for _ in range(n)]
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError("edge %d-%d has an endpoint outside "
                                   "0..%d" % (u, v, n - 1))
        if u == v:
            raise SelfLoopError("self-loop at vertex %d" % u)
        if v in adjacency[u]:
            raise DuplicateEdgeError("duplicate edge %d-%d"
                                     % (min(u, v), max(u, v)))
        adjacency[u].add(v)
        adjacency[v].add(u)
    return Graph(n, adjacency)


def ball(g: Graph, x: int, r: Radius) -> Tuple[int, ...]:
    return bits_to_tuple(g.ball_mask(x, r))


def punctured_ball(g: Graph, x: int, r: Radius, y: int) -> Tuple[int, ...]:
    if x == y:
        raise PuncturedCenterError("puncture %d coincides with the center"
                                   % x)
    return bits_to_tuple(g.reach(x, r, removed=1 << y))


def two_punctured_ball(g: Graph, x: int, r: Radius,
                       a: int, b: int) -> Tuple[int, ...]:
    """Punctured ball with both a and b deleted (a == b allowed)."""
    if x in (a, b):
        raise PuncturedCenterError("puncture coincides with the center %d"
                                   % x)
    return bits_to_tuple(g.reach(x, r, removed=(1 << a) | (1 << b)))
