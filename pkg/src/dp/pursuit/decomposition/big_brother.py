"""
Big brother graphs: blocks peeled one leaf at a time, each dominated by
the articulation point joining it to the rest.
"""
from typing import Optional

from ..graph.core import Graph
from ..graph.structure import (blocks_and_articulations, dominating_mask,
                               require_connected)
from ..utils import bits_to_tuple, get_logger, iter_bits, tuple_to_bits
from .types import Decomposition, Kind, assemble

logger = get_logger(__name__)


def _blocks(g: Graph, remaining: int):
    sub, names = g.induced(iter_bits(remaining))
    tree = blocks_and_articulations(sub)
    blocks = [tuple(names[v] for v in block) for block in tree.blocks]
    articulations = {names[v] for v in tree.articulations}
    return blocks, articulations


def big_brother(g: Graph) -> Optional[Decomposition]:
    require_connected(g, "big_brother")
    remaining = g.full_mask
    peels = []
    while True:
        blocks, articulations = _blocks(g, remaining)
        if len(blocks) == 1:
            root = blocks[0]
            brother = dominating_mask(g, tuple_to_bits(root))
            if brother is None:
                logger.debug("Last block %s has no dominating vertex", root)
                return None
            return assemble(Kind.BIG_BROTHER, root, brother, peels)
        candidates = []
        for block in blocks:
            gates = [a for a in block if a in articulations]
            if len(gates) != 1:
                continue
            a = gates[0]
            if tuple_to_bits(block) & ~g.closed_mask(a) == 0:
                candidates.append((min(v for v in block if v != a), a, block))
        if not candidates:
            logger.debug("No leaf block is dominated by its articulation "
                         "point")
            return None
        _, a, block = min(candidates)
        peels.append((block, a, a))
        remaining &= ~(tuple_to_bits(block) & ~(1 << a))
        logger.debug("Peeled block %s at %d, %d vertices left", block, a,
                     len(bits_to_tuple(remaining)))
