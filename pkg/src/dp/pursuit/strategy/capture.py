"""
Radius-one capture strategy on dismantlable bipartite graphs.

A robber on an eliminated vertex v is chased as if he stood on the vertex
y dominating v, except that a cop next to y but not next to v steps onto
y first.
"""
from ..dismantling.certificate import EliminationCertificate, Family
from ..dismantling.verify import verify_certificate
from ..errors import StrategyError
from ..game.value import GameSpec
from ..graph.core import Graph
from .table import StrategyTable


def capture_move(g: Graph, cert: EliminationCertificate, c: int, r: int):
    shadow = r
    for v, y in zip(cert.order, cert.eliminators):
        if g.dist[c][shadow] <= 2:
            break
        if shadow == v and g.adjacent(c, y):
            return y
        if c == v:
            return min(g.neighbors(v))
        if shadow == v:
            shadow = y
    return min(u for u in g.adjacency[c] + (c,)
               if g.dist[u][shadow] <= 1)


def capture_strategy(g: Graph, cert: EliminationCertificate) -> StrategyTable:
    if cert.family != Family.BIPARTITE:
        raise StrategyError("capture strategies need a bipartite "
                            "certificate, got %s" % cert.family.value)
    if not verify_certificate(g, cert):
        raise StrategyError("certificate does not verify")
    moves = {(c, r): (capture_move(g, cert, c, r),)
             for c in range(g.n) for r in range(g.n) if c != r}
    return StrategyTable(game=GameSpec.capture(1),
                         start_vertex=cert.order[-1], moves=moves)
