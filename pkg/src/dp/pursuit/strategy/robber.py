import random
from typing import Sequence

from ..errors import StrategyError
from ..game.base_solver import BaseSolver
from ..game.policy import OptimalRobberPolicy, RobberPolicy
from ..game.value import GameValue
from ..utils import iter_bits


class RandomRobber(RobberPolicy):
    """Uniformly random legal moves, reproducible from the seed."""

    def __init__(self, solver: BaseSolver, seed: int):
        self.solver = solver
        self.spec = solver.spec
        self.rng = random.Random(seed)

    def start(self, c):
        return self.rng.choice([r for r in range(self.solver.g.n) if r != c])

    def reply(self, c, r, move):
        positions = []
        for cop in move:
            if self.solver.captures(cop, r):
                positions.append(r)
                continue
            r = self.rng.choice(list(iter_bits(self.solver.robber_steps(r,
                                                                        cop))))
            positions.append(r)
        return tuple(positions)


class ScriptedRobber(RobberPolicy):
    """Replays a fixed sequence of positions, then stays put."""

    def __init__(self, solver: BaseSolver, positions: Sequence[int]):
        if not positions:
            raise StrategyError("a scripted robber needs a start position")
        self.solver = solver
        self.spec = solver.spec
        self.positions = list(positions)
        self._next = 1

    def start(self, c):
        return self.positions[0]

    def reply(self, c, r, move):
        taken = self.positions[self._next:self._next + len(move)]
        self._next += len(taken)
        last = taken[-1] if taken else r
        return tuple(taken) + (last,) * (len(move) - len(taken))


def make_robber(name: str, value: GameValue, solver: BaseSolver
                ) -> RobberPolicy:
    """Robber from its command-line name: optimal, random:SEED or
    script:V0,V1,..."""
    kind, _, argument = name.partition(":")
    if kind == "optimal":
        return OptimalRobberPolicy(value, solver)
    if kind == "random":
        return RandomRobber(solver, int(argument or 0))
    if kind == "script":
        return ScriptedRobber(solver, [int(v) for v in argument.split(",")
                                       if v])
    raise StrategyError("unknown robber %r" % name)
