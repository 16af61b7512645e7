from ..errors import DecompositionError
from ..graph.core import Graph
from ..graph.structure import blocks_and_articulations
from ..utils import get_logger, tuple_to_bits
from .types import Decomposition, Kind

logger = get_logger(__name__)


def _check_shape(g: Graph, d: Decomposition):
    if not isinstance(d, Decomposition):
        raise DecompositionError("not a decomposition")
    count = len(d.pieces)
    if count == 0:
        raise DecompositionError("a decomposition has at least one piece")
    if not (len(d.big_brother) == len(d.small_brother) == len(d.parent)
            == count):
        raise DecompositionError("per-piece lists differ in length")
    if d.parent[0] != -1 or d.small_brother[0] is not None:
        raise DecompositionError("piece 0 must be the root")
    for i, piece in enumerate(d.pieces):
        if not piece or not all(0 <= v < g.n for v in piece):
            raise DecompositionError("piece %d is empty or out of range" % i)
        if i and not (0 <= d.parent[i] < i):
            raise DecompositionError("parent of piece %d must come earlier"
                                     % i)
        if i and d.small_brother[i] is None:
            raise DecompositionError("piece %d has no small brother" % i)


def verify_decomposition(g: Graph, d: Decomposition) -> bool:
    _check_shape(g, d)
    masks = [tuple_to_bits(piece) for piece in d.pieces]
    covered = 0
    for mask in masks:
        covered |= mask
    if covered != g.full_mask:
        logger.debug("Pieces miss some vertices")
        return False
    for u, v in g.edges():
        edge = (1 << u) | (1 << v)
        if not any(mask & edge == edge for mask in masks):
            logger.debug("Edge %d-%d lies in no piece", u, v)
            return False
    if d.kind == Kind.BIG_BROTHER:
        blocks = {tuple(sorted(b))
                  for b in blocks_and_articulations(g).blocks}
    earlier = 0
    for i, mask in enumerate(masks):
        y = d.big_brother[i]
        if not mask >> y & 1 or mask & ~g.closed_mask(y):
            logger.debug("Piece %d is not dominated by %d", i, y)
            return False
        if d.kind == Kind.BIG_BROTHER and \
                tuple(sorted(d.pieces[i])) not in blocks:
            logger.debug("Piece %d is not a block", i)
            return False
        if i:
            x = d.small_brother[i]
            gate = (1 << x) | (1 << y)
            if d.kind == Kind.BIG_BROTHER and x != y:
                return False
            if x != y and not g.adjacent(x, y):
                return False
            meet = mask & earlier
            # a vertex gate {x} may have its big brother y inside the piece
            vertex_gate = x != y and meet == 1 << x and not earlier >> y & 1
            if (meet != gate and not vertex_gate) or \
                    masks[d.parent[i]] & meet != meet:
                logger.debug("Piece %d does not meet the earlier pieces in "
                             "its gate", i)
                return False
            inside = mask & ~meet
            outside = earlier & ~meet
            if any(g.open_mask(v) & outside for v in range(g.n)
                   if inside >> v & 1):
                logger.debug("Piece %d is not separated by its gate", i)
                return False
        earlier |= mask
    return True
