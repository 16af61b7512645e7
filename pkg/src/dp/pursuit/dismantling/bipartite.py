"""
Bipartite dismantling: the radius-one capture game on bipartite graphs.

Each vertex leaves through a vertex y at distance two whose closed
neighbourhood covers its remaining neighbours; the last two vertices
form an edge.
"""
from typing import Optional

from ..errors import NotBipartiteError
from ..graph.core import Graph
from ..graph.structure import bipartition, require_connected
from ..utils import get_logger, iter_bits
from .certificate import EliminationCertificate, Family
from .search import backtrack_eliminate, check_backtrack_size

logger = get_logger(__name__)


def bipartite_condition(g: Graph, remaining: int, v: int, y: int) -> bool:
    return y != v and not g.adjacent(v, y) and \
        g.open_mask(v) & remaining & ~g.closed_mask(y) == 0


def final_edge(g: Graph, remaining: int) -> bool:
    vertices = list(iter_bits(remaining))
    return len(vertices) == 1 or g.adjacent(vertices[0], vertices[1])


def bipartite_dismantle(g: Graph, force: bool = False, greedy: bool = False
                        ) -> Optional[EliminationCertificate]:
    require_connected(g, "bipartite_dismantle")
    if bipartition(g) is None:
        raise NotBipartiteError("bipartite_dismantle needs a bipartite "
                                "graph")
    check_backtrack_size(g, "bipartite_dismantle", force)

    def eliminator(remaining, v):
        for y in iter_bits(remaining):
            if bipartite_condition(g, remaining, v, y):
                return y
        return None

    result = backtrack_eliminate(g, eliminator,
                                 lambda remaining: final_edge(g, remaining),
                                 final_size=2, greedy=greedy)
    logger.debug("bipartite_dismantle on %d vertices: %s", g.n,
                 "found" if result else "none")
    if result is None:
        return None
    return EliminationCertificate(Family.BIPARTITE, result[0], result[1], {})
