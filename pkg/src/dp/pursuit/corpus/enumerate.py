import random
from itertools import combinations
from math import comb
from typing import Iterator, List, Optional

from ..config import config
from ..errors import GuardError
from ..graph.core import Graph, build
from ..graph.structure import is_connected
from ..utils import get_logger

logger = get_logger(__name__)


def check_enumerate_size(n: int, max_n: Optional[int] = None):
    max_n = config["enumerate_max_n"] if max_n is None else max_n
    if n < 0 or n > max_n:
        logger.warning("Refusing to enumerate graphs on %d vertices", n)
        raise GuardError("labeled enumeration is limited to n <= %d, got %d"
                         % (max_n, n))


def connected_count(n: int) -> int:
    """Number of connected labeled graphs on n vertices."""
    counts = [0, 1]
    for m in range(2, n + 1):
        total = 2 ** comb(m, 2)
        total -= sum(comb(m - 1, k - 1) * counts[k] * 2 ** comb(m - k, 2)
                     for k in range(1, m))
        counts.append(total)
    return counts[n] if n >= 1 else 1


def enumerate_connected(n: int, max_n: Optional[int] = None
                        ) -> Iterator[Graph]:
    """Connected labeled graphs on n vertices.

    Bit i of the adjacency mask stands for the i-th pair (u, v), u < v, in
    lexicographic order; graphs come out in ascending mask order.
    """
    check_enumerate_size(n, max_n)
    if n <= 1:
        yield build(n, [])
        return
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        # a connected graph needs at least n - 1 edges
        if bin(mask).count("1") < n - 1:
            continue
        g = build(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if is_connected(g):
            yield g


def enumerate_connected_bipartite(n: int, max_n: Optional[int] = None
                                  ) -> Iterator[Graph]:
    """Connected bipartite labeled graphs on n vertices, each once.

    A connected bipartite graph has exactly one 2-colouring with vertex 0
    on the first side, so looping over those colourings and over the edge
    subsets between the sides lists every graph exactly once.
    """
    check_enumerate_size(n, max_n)
    if n <= 1:
        yield build(n, [])
        return
    for colouring in range(1 << (n - 1)):
        side = [0] + [colouring >> (v - 1) & 1 for v in range(1, n)]
        across = [(u, v) for u, v in combinations(range(n), 2)
                  if side[u] != side[v]]
        if len(across) < n - 1:
            continue
        for mask in range(1 << len(across)):
            if bin(mask).count("1") < n - 1:
                continue
            g = build(n, [across[i] for i in range(len(across))
                          if mask >> i & 1])
            if is_connected(g):
                yield g


def sample_connected(n: int, count: int, seed: int) -> List[Graph]:
    """`count` connected graphs, each edge present with probability 1/2,
    rejection-sampled; the same seed gives the same list."""
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    samples = []
    while len(samples) < count:
        g = build(n, [p for p in pairs if rng.random() < 0.5])
        if is_connected(g):
            samples.append(g)
    return samples
