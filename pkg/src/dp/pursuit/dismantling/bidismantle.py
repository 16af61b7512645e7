"""
k-bidismantling and strong 2-bidismantling.

A vertex v leaves through a later pair (x, y), adjacent or equal, when
every remaining vertex v reaches in k steps while avoiding x and y lies
in the closed neighbourhood of y.
"""
from typing import Optional

from ..errors import GameSpecError
from ..graph.core import Graph
from ..graph.structure import require_connected
from ..utils import get_logger, iter_bits
from .certificate import EliminationCertificate, Family
from .search import backtrack_eliminate, check_backtrack_size

logger = get_logger(__name__)


def bi_condition(g: Graph, remaining: int, v: int, x: int, y: int,
                 k: int) -> bool:
    if v in (x, y) or (x != y and not g.adjacent(x, y)):
        return False
    return g.reach(v, k, removed=(1 << x) | (1 << y)) & remaining \
        & ~g.closed_mask(y) == 0


def strong_condition(g: Graph, remaining: int, v: int, x: int,
                     y: int) -> bool:
    if not bi_condition(g, remaining, v, x, y, 2):
        return False
    if x == y:
        return True
    return g.reach(v, 2, removed=1 << y) & remaining \
        & ~g.reach(x, 2, removed=1 << y) == 0


def _pairs(remaining, v):
    # (y, x) ascending, so the eliminator tried first has the smallest y
    others = [u for u in iter_bits(remaining) if u != v]
    for y in others:
        for x in others:
            yield x, y


def bidismantle(g: Graph, k: int, force: bool = False, greedy: bool = False
                ) -> Optional[EliminationCertificate]:
    require_connected(g, "bidismantle")
    if int(k) != k or k < 1:
        raise GameSpecError("k must be a positive integer, got %r" % k)
    check_backtrack_size(g, "bidismantle", force)

    def eliminator(remaining, v):
        for x, y in _pairs(remaining, v):
            if bi_condition(g, remaining, v, x, y, k):
                return (x, y)
        return None

    result = backtrack_eliminate(g, eliminator, lambda remaining: True,
                                 greedy=greedy)
    logger.debug("bidismantle(k=%d) on %d vertices: %s", k, g.n,
                 "found" if result else "none")
    if result is None:
        return None
    return EliminationCertificate(Family.BIDISMANTLE, result[0], result[1],
                                  {"k": k})


def strong_bidismantle(g: Graph, force: bool = False, greedy: bool = False
                       ) -> Optional[EliminationCertificate]:
    require_connected(g, "strong_bidismantle")
    check_backtrack_size(g, "strong_bidismantle", force)

    def eliminator(remaining, v):
        for x, y in _pairs(remaining, v):
            if strong_condition(g, remaining, v, x, y):
                return (x, y)
        return None

    result = backtrack_eliminate(g, eliminator, lambda remaining: True,
                                 greedy=greedy)
    logger.debug("strong_bidismantle on %d vertices: %s", g.n,
                 "found" if result else "none")
    if result is None:
        return None
    return EliminationCertificate(Family.STRONG_BIDISMANTLE, result[0],
                                  result[1], {"k": 2})
