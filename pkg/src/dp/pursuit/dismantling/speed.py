"""
Greedy recognizers for the visible cop-and-robber game with speeds.

Any valid elimination keeps the remaining graph dismantlable, so the
greedy choice of the smallest eligible (vertex, eliminator) pair decides
membership.
"""
import random
from typing import Callable, Optional

from ..errors import HypothesisError
from ..graph.core import Graph, Radius
from ..graph.structure import require_connected
from ..utils import get_logger, iter_bits
from .certificate import EliminationCertificate, Family

logger = get_logger(__name__)

# (g, remaining, v, u) -> whether u may eliminate v
Condition = Callable[[Graph, int, int, int], bool]


def ss_condition(s: Radius, s_prime: Radius) -> Condition:
    def condition(g, remaining, v, u):
        return g.reach(v, s, removed=1 << u) & remaining \
            & ~g.ball_mask(u, s_prime) == 0
    return condition


def local_condition(s: Radius) -> Condition:
    def condition(g, remaining, v, u):
        return g.reach(v, s, removed=1 << u, within=remaining) \
            & ~g.closed_mask(u) == 0
    return condition


def mno_condition(g: Graph, remaining: int, v: int, u: int) -> bool:
    if not g.adjacent(u, v):
        return False
    target = g.closed_mask(u) & remaining
    return all(g.closed_mask(w) & remaining & ~target == 0
               for w in iter_bits(g.closed_mask(v) & remaining))


def greedy_eliminate(g: Graph, condition: Condition,
                     rng: Optional[random.Random] = None):
    """Eliminate vertices while some pair satisfies `condition`.

    Scans (v, u) in ascending order, or in random order when `rng` is
    given. Returns (order, eliminators) when a single vertex remains and
    None otherwise.
    """
    remaining = g.full_mask
    order, eliminators = [], []
    while remaining & (remaining - 1):
        candidates = list(iter_bits(remaining))
        pairs = [(v, u) for v in candidates for u in candidates if u != v]
        if rng is not None:
            rng.shuffle(pairs)
        for v, u in pairs:
            if condition(g, remaining, v, u):
                order.append(v)
                eliminators.append(u)
                remaining &= ~(1 << v)
                break
        else:
            logger.debug("Elimination stuck with %d vertices left",
                         bin(remaining).count("1"))
            return None
    if remaining:
        order.append(remaining.bit_length() - 1)
    return tuple(order), tuple(eliminators)


def ss_dismantle(g: Graph, s: Radius, s_prime: Radius
                 ) -> Optional[EliminationCertificate]:
    require_connected(g, "ss_dismantle")
    result = greedy_eliminate(g, ss_condition(s, s_prime))
    if result is None:
        return None
    return EliminationCertificate(Family.SS_DISMANTLE, result[0], result[1],
                                  {"s": s, "s_prime": s_prime})


def random_ss_dismantle(g: Graph, s: Radius, s_prime: Radius, seed: int
                        ) -> Optional[EliminationCertificate]:
    """ss_dismantle with the eligible pairs tried in a seeded random
    order."""
    require_connected(g, "random_ss_dismantle")
    result = greedy_eliminate(g, ss_condition(s, s_prime),
                              rng=random.Random(seed))
    if result is None:
        return None
    return EliminationCertificate(Family.SS_DISMANTLE, result[0], result[1],
                                  {"s": s, "s_prime": s_prime})


def ss_dismantle_local(g: Graph, s: Radius
                       ) -> Optional[EliminationCertificate]:
    """(s, 1)-dismantling with balls taken in the remaining subgraph."""
    require_connected(g, "ss_dismantle_local")
    result = greedy_eliminate(g, local_condition(s))
    if result is None:
        return None
    return EliminationCertificate(Family.SS_DISMANTLE, result[0], result[1],
                                  {"s": s, "s_prime": 1})


def mno_order(g: Graph) -> Optional[EliminationCertificate]:
    """Maximum neighbourhood ordering; exists iff g is dually chordal."""
    require_connected(g, "mno_order")
    result = greedy_eliminate(g, mno_condition)
    if result is None:
        return None
    return EliminationCertificate(Family.MNO, result[0], result[1], {})


def bfs_parents(g: Graph, root: int):
    """BFS tree parents, each the smallest neighbour one level closer."""
    row = g.dist[root]
    parents = {}
    for v in range(g.n):
        if v != root:
            parents[v] = min(u for u in g.neighbors(v)
                             if row[u] == row[v] - 1)
    return parents


def hyperbolic_order(g: Graph, r: int) -> EliminationCertificate:
    """(2r, r + 2delta)-dismantling order read off a BFS tree.

    Vertices leave farthest from vertex 0 first; each is eliminated by its
    tree ancestor r + 2delta levels up (vertex 0 when it is shallower).
    """
    from ..hyperbolicity import hyperbolicity

    require_connected(g, "hyperbolic_order")
    two_delta = hyperbolicity(g).two_delta
    if r < max(1, two_delta):
        raise HypothesisError("hyperbolic_order needs r >= max(1, 2delta) "
                              "= %d, got %d" % (max(1, two_delta), r))
    reach = r + two_delta
    parents = bfs_parents(g, 0)
    row = g.dist[0]
    order = sorted(range(g.n), key=lambda v: (-row[v], v))
    eliminators = []
    for v in order[:-1]:
        u = v
        for _ in range(reach):
            if u == 0:
                break
            u = parents[u]
        eliminators.append(u)
    return EliminationCertificate(Family.SS_DISMANTLE, tuple(order),
                                  tuple(eliminators),
                                  {"s": 2 * r, "s_prime": reach})
