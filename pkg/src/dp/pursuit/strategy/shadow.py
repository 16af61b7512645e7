"""
Cop strategy read off an (s, s')-dismantling order.

The cop chases a shadow of the robber: whenever the robber sits on an
eliminated vertex, the cop plays as if he stood on its eliminator.
"""
from ..dismantling.certificate import EliminationCertificate, Family
from ..dismantling.verify import verify_certificate
from ..errors import StrategyError
from ..game.value import GameSpec
from ..graph.core import Graph
from .table import StrategyTable


def shadow_move(g: Graph, cert: EliminationCertificate, c: int, r: int):
    s_prime = cert.params["s_prime"]
    shadow = r
    for v, u in zip(cert.order, cert.eliminators):
        if g.dist[c][shadow] <= s_prime:
            return shadow
        if c == v:
            return u
        if shadow == v:
            shadow = u
    # only the last vertex of the order is left
    return shadow


def shadow_strategy(g: Graph, cert: EliminationCertificate) -> StrategyTable:
    if cert.family != Family.SS_DISMANTLE:
        raise StrategyError("shadow strategies need an ss certificate, got "
                            "%s" % cert.family.value)
    if not verify_certificate(g, cert):
        raise StrategyError("certificate does not verify for (s, s') = "
                            "(%s, %s)" % (cert.params["s"],
                                          cert.params["s_prime"]))
    moves = {(c, r): (shadow_move(g, cert, c, r),)
             for c in range(g.n) for r in range(g.n) if c != r}
    return StrategyTable(
        game=GameSpec.visible(cert.params["s"], cert.params["s_prime"]),
        start_vertex=cert.order[-1], moves=moves)
