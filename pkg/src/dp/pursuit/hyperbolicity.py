"""
Gromov hyperbolicity from the four-point condition.

All values are kept doubled (2xi, 2eta, 2delta) so they stay integers.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .dismantling.speed import ss_dismantle
from .errors import HypothesisError
from .graph.core import Graph
from .graph.structure import require_connected
from .utils import get_logger

logger = get_logger(__name__)


@dataclass
class FourPointReport:
    quadruple: Tuple[int, int, int, int]
    # d(u,v)+d(x,y), d(u,x)+d(v,y), d(u,y)+d(v,x)
    sums: Tuple[int, int, int]
    two_xi: int
    two_eta: int

    def to_dict(self):
        return {"quadruple": list(self.quadruple), "sums": list(self.sums),
                "two_xi": self.two_xi, "two_eta": self.two_eta}


@dataclass
class HyperbolicityReport:
    two_delta: int
    witness: Tuple[int, int, int, int]

    @property
    def delta(self) -> float:
        return self.two_delta / 2

    def to_dict(self):
        return {"two_delta": self.two_delta, "delta": self.delta,
                "witness": list(self.witness)}


def four_point(g: Graph, u: int, v: int, x: int, y: int) -> FourPointReport:
    d = g.dist
    sums = (int(d[u][v] + d[x][y]), int(d[u][x] + d[v][y]),
            int(d[u][y] + d[v][x]))
    low, mid, high = sorted(sums)
    return FourPointReport(quadruple=(u, v, x, y), sums=sums,
                           two_xi=high - mid, two_eta=high - low)


def distance_matrix(g: Graph) -> np.ndarray:
    return np.array(g.dist, dtype=np.int64).reshape(g.n, g.n)


def hyperbolicity(g: Graph) -> HyperbolicityReport:
    """Exhaustive scan over all quadruples, one first vertex at a time.

    The witness is the lexicographically smallest quadruple attaining the
    maximum.
    """
    require_connected(g, "hyperbolicity")
    n = g.n
    if n == 0:
        return HyperbolicityReport(two_delta=0, witness=(0, 0, 0, 0))
    M = distance_matrix(g)
    best, witness = -1, (0, 0, 0, 0)
    for u in range(n):
        # axes are (v, x, y)
        S1 = M[u][:, None, None] + M[None, :, :]
        S2 = M[u][None, :, None] + M[:, None, :]
        S3 = M[u][None, None, :] + M[:, :, None]
        S = np.sort(np.stack([S1, S2, S3], axis=-1), axis=-1)
        two_xi = S[..., 2] - S[..., 1]
        flat = int(np.argmax(two_xi))
        value = int(two_xi.reshape(-1)[flat])
        if value > best:
            best = value
            v, x, y = np.unravel_index(flat, two_xi.shape)
            witness = (u, int(v), int(x), int(y))
    logger.debug("two_delta=%d witnessed by %s", best, witness)
    return HyperbolicityReport(two_delta=best, witness=witness)


def check_hyperbolic_dismantling(g: Graph, r: int) -> bool:
    """Whether g is (2r, r + 2delta)-dismantlable; requires r >= 2delta."""
    two_delta = hyperbolicity(g).two_delta
    if r < 1 or r < two_delta:
        raise HypothesisError("need r >= max(1, 2delta) = %d, got %d"
                              % (max(1, two_delta), r))
    return ss_dismantle(g, 2 * r, r + two_delta) is not None
