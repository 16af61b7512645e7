from typing import Callable, List, Optional, Set, Tuple

from ..config import config
from ..errors import GuardError
from ..graph.core import Graph
from ..utils import get_logger, iter_bits

logger = get_logger(__name__)


def check_backtrack_size(g: Graph, operation: str, force: bool) -> None:
    if not force and g.n > config["backtrack_max_n"]:
        logger.warning("Refusing %s on %d vertices", operation, g.n)
        raise GuardError("%s is limited to %d vertices (use force)"
                         % (operation, config["backtrack_max_n"]))


def backtrack_eliminate(
        g: Graph,
        eliminator: Callable[[int, int], Optional[object]],
        final: Callable[[int], bool],
        final_size: int = 1,
        greedy: bool = False,
) -> Optional[Tuple[Tuple[int, ...], Tuple[object, ...]]]:
    """Search an elimination order over the remaining vertex set.

    `eliminator(remaining, v)` returns the first admissible eliminator of v
    or None. Which eliminator is used does not change the remaining set,
    so only vertices are branched on; dead remaining sets are memoised.
    The search stops once `final_size` vertices are left and `final`
    accepts them. With `greedy` the first eliminable vertex is always
    taken and a dead end is final.
    """
    failed: Set[int] = set()

    def search(remaining) -> Optional[List[Tuple[int, object]]]:
        if bin(remaining).count("1") <= final_size:
            return [] if final(remaining) else None
        if remaining in failed:
            return None
        for v in iter_bits(remaining):
            chosen = eliminator(remaining, v)
            if chosen is None:
                continue
            rest = search(remaining & ~(1 << v))
            if rest is not None:
                return [(v, chosen)] + rest
            if greedy:
                break
        failed.add(remaining)
        return None

    steps = search(g.full_mask)
    if steps is None:
        return None
    eliminated = 0
    for v, _ in steps:
        eliminated |= 1 << v
    order = tuple(v for v, _ in steps) + \
        tuple(iter_bits(g.full_mask & ~eliminated))
    return order, tuple(e for _, e in steps)
