"""
Big two-brother graphs: pieces cut off by a vertex or an edge, one end of
which dominates the piece.
"""
from typing import Optional

from ..graph.core import Graph
from ..graph.structure import (components, dominating_mask,
                               require_connected)
from ..utils import bits_to_tuple, get_logger, iter_bits, tuple_to_bits
from .types import Decomposition, Kind, assemble

logger = get_logger(__name__)


def _find_peel(g: Graph, remaining: int):
    """Smallest (min C, y, x) with y dominating the component C of the
    remaining graph minus {x, y}."""
    best = None
    for y in iter_bits(remaining):
        for x in iter_bits(remaining):
            if x != y and not g.adjacent(x, y):
                continue
            rest = remaining & ~(1 << x) & ~(1 << y)
            for component in map(tuple_to_bits, components(g, rest)):
                if component & ~g.open_mask(y):
                    continue
                key = ((component & -component).bit_length() - 1, y, x)
                if best is None or key < best[0]:
                    best = (key, component, x, y)
    return best


def big_two_brother(g: Graph) -> Optional[Decomposition]:
    require_connected(g, "big_two_brother")
    remaining = g.full_mask
    peels = []
    while True:
        brother = dominating_mask(g, remaining)
        if brother is not None:
            return assemble(Kind.BIG_TWO_BROTHER, bits_to_tuple(remaining),
                            brother, peels)
        leaf = next((v for v in iter_bits(remaining)
                     if bin(g.open_mask(v) & remaining).count("1") == 1),
                    None)
        if leaf is not None:
            u = (g.open_mask(leaf) & remaining).bit_length() - 1
            peels.append((tuple(sorted((leaf, u))), u, u))
            remaining &= ~(1 << leaf)
            continue
        found = _find_peel(g, remaining)
        if found is None:
            logger.debug("No vertex or edge cuts off a dominated piece")
            return None
        _, component, x, y = found
        peels.append((bits_to_tuple(component | (1 << x) | (1 << y)), x, y))
        remaining &= ~component
