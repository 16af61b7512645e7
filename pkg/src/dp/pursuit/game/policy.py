"""
Cop and robber policies, and the optimal pair read off a solved game.
"""
import math
from abc import ABC, abstractmethod
from typing import Dict, Optional, Tuple

from ..graph.core import Graph
from ..utils import iter_bits
from .base_solver import BaseSolver, Move
from .value import GameSpec, GameValue


def make_solver(g: Graph, spec: GameSpec, force: bool = False) -> BaseSolver:
    from . import solver_dict
    return solver_dict[spec.variant.value](g, spec, force=force)


class CopPolicy(ABC):
    spec: GameSpec

    @abstractmethod
    def start(self) -> int:
        """Initial cop vertex."""

    @abstractmethod
    def move(self, c: int, r: int) -> Move:
        """The walk the cop plays from configuration (c, r)."""


class RobberPolicy(ABC):
    spec: GameSpec

    @abstractmethod
    def start(self, c: int) -> int:
        """Initial robber vertex once the cop sits on c."""

    @abstractmethod
    def reply(self, c: int, r: int, move: Move) -> Tuple[int, ...]:
        """Robber positions after each cop step of `move`."""


def survival_key(value: GameValue, c: int, r: int):
    """Sort key ranking robber positions, best for the robber first:
    robber wins, then the largest label, then the smallest vertex."""
    label = value.label(c, r)
    return (0 if label == 0 else 1, -label, r)


class OptimalCopPolicy(CopPolicy):
    """Minimises the worst label the robber can reach after the round.

    Ties go to the lexicographically smallest walk; once every robber
    position is captured the cop stays put for the rest of the round.
    """

    def __init__(self, value: GameValue, solver: BaseSolver):
        self.value = value
        self.solver = solver
        self.spec = value.spec
        self._memo: Dict[tuple, Tuple[float, Move]] = {}

    def start(self):
        best = self.value.best_start
        return 0 if best is None else best

    def _score(self, c, reachable):
        worst = 0
        for r in iter_bits(reachable):
            label = self.value.label(c, r)
            if label == 0:
                return math.inf
            worst = max(worst, label)
        return worst

    def _best(self, step, c, reachable):
        remaining = self.spec.steps_per_round - step
        if reachable == 0:
            return 0, (c,) * remaining
        if remaining == 0:
            return self._score(c, reachable), ()
        key = (step, c, reachable)
        best = self._memo.get(key)
        if best is None:
            for target in iter_bits(self.solver.cop_steps(c)):
                score, rest = self._best(
                    step + 1, target, self.solver.advance(target, reachable))
                if best is None or score < best[0]:
                    best = (score, (target,) + rest)
            self._memo[key] = best
        return best

    def move(self, c, r):
        return self._best(0, c, 1 << r)[1]


class OptimalRobberPolicy(RobberPolicy):
    """Heads for robber-winning configurations, otherwise for the largest
    label; the phase trajectory is rebuilt backwards from the target."""

    def __init__(self, value: GameValue, solver: BaseSolver):
        self.value = value
        self.solver = solver
        self.spec = value.spec

    def _pick(self, c, mask) -> Optional[int]:
        candidates = [r for r in iter_bits(mask) if r != c]
        if not candidates:
            return None
        return min(candidates, key=lambda r: survival_key(self.value, c, r))

    def start(self, c):
        target = self._pick(c, self.solver.g.full_mask)
        return c if target is None else target

    def reply(self, c, r, move):
        sets = self.solver.phase_sets(r, move)
        last = len(sets) - 1
        while last >= 0 and sets[last] == 0:
            last -= 1
        if last < 0:
            return (r,) * len(move)
        if last == len(sets) - 1:
            target = self._pick(move[last], sets[last])
        else:
            target = min(iter_bits(sets[last]))
        trajectory = [target]
        for step in range(last, 0, -1):
            after = trajectory[-1]
            cop = move[step]
            trajectory.append(min(
                p for p in iter_bits(sets[step - 1])
                if not self.solver.captures(cop, p)
                and self.solver.robber_steps(p, cop) >> after & 1))
        trajectory.reverse()
        trajectory += [trajectory[-1]] * (len(move) - len(trajectory))
        return tuple(trajectory)


def extract_optimal_policies(value: GameValue, g: Graph
                             ) -> Tuple[OptimalCopPolicy, OptimalRobberPolicy]:
    solver = make_solver(g, value.spec, force=True)
    return OptimalCopPolicy(value, solver), OptimalRobberPolicy(value, solver)
