"""
Witness game: the robber is seen by the cop only every k moves.

At each visible moment the cop commits to a walk of k unit moves. The
robber knows the walk and may be anywhere in the set of positions his
moves can reach without meeting the cop; the plan wins when every
position he can end the phase on is already a cop win.
"""
from ..config import config
from ..errors import GuardError
from ..graph.core import Graph, Radius
from ..utils import get_logger, iter_bits
from .base_solver import BaseSolver
from .value import GameSpec, GameValue, Variant

logger = get_logger(__name__)


class WitnessSolver(BaseSolver):
    variant = Variant.WITNESS

    def check(self):
        super().check()
        k, n = self.spec.k, self.g.n
        if not self.force and (k > config["witness_max_k"]
                               or n > config["witness_max_n"]):
            logger.warning("Refusing witness game with k=%d on %d vertices",
                           k, n)
            raise GuardError(
                "witness game limited to k <= %d and n <= %d (use force)"
                % (config["witness_max_k"], config["witness_max_n"]))
        self._memo = {}

    def immediate_mask(self, c):
        return self.g.closed_mask(c)

    def cop_steps(self, c):
        return self.g.closed_mask(c)

    def robber_steps(self, p, cop):
        return self.g.reach(p, self.spec.s, removed=1 << cop)

    def captures(self, cop, robber):
        return cop == robber

    def _can_finish(self, step, c, reachable, won):
        if reachable == 0:
            return True
        if step == self.spec.k:
            return reachable & ~won[c] == 0
        key = (step, c, reachable)
        result = self._memo.get(key)
        if result is None:
            result = any(
                self._can_finish(step + 1, target,
                                 self.advance(target, reachable), won)
                for target in iter_bits(self.g.closed_mask(c)))
            self._memo[key] = result
        return result

    def round_masks(self, won):
        # plan outcomes depend on `won`, so the memo lives for one level
        self._memo = {}
        result = []
        for c in range(self.g.n):
            mask = 0
            for r in range(self.g.n):
                if r != c and not won[c] >> r & 1 and \
                        self._can_finish(0, c, 1 << r, won):
                    mask |= 1 << r
            result.append(mask)
        return result


def solve_witness(g: Graph, k: int, s: Radius = 1,
                  force: bool = False) -> GameValue:
    return WitnessSolver(g, GameSpec.witness(k, s), force=force).solve()
