from abc import ABC, abstractmethod
from typing import Iterator, List, Sequence, Tuple

from ..graph.core import Graph
from ..graph.structure import require_connected
from ..utils import get_logger, iter_bits
from .value import GameSpec, GameValue

logger = get_logger(__name__)

# a cop move is the walk of vertices he occupies during one round
Move = Tuple[int, ...]


class BaseSolver(ABC):
    """Least-fixpoint solver shared by every game variant.

    Subclasses describe one round of play from a configuration where the
    cop decides; the fixpoint assigns level 1 to immediate captures and
    level l+1 to configurations the cop can force into levels <= l.
    """

    def __init__(self, g: Graph, spec: GameSpec, force: bool = False):
        self.g = g
        self.spec = spec
        self.force = force
        self.check()

    def check(self):
        require_connected(self.g, "solving the %s game"
                          % self.spec.variant.value)

    @abstractmethod
    def immediate_mask(self, c: int) -> int:
        """Robber positions the cop standing on c captures this round."""

    @abstractmethod
    def round_masks(self, won: Sequence[int]) -> List[int]:
        """Per cop vertex, robber positions from which one round of play
        forces the game into a configuration marked in `won`."""

    @abstractmethod
    def cop_steps(self, c: int) -> int:
        """Vertices the cop may occupy after one of his moves from c."""

    @abstractmethod
    def robber_steps(self, p: int, cop: int) -> int:
        """Positions a robber on p may reach once the cop stands on cop."""

    @abstractmethod
    def captures(self, cop: int, robber: int) -> bool:
        pass

    def cop_moves(self, c: int) -> Iterator[Move]:
        """Legal cop moves in ascending lexicographic order."""
        def walks(vertex, length):
            if length == 0:
                yield ()
                return
            for target in iter_bits(self.cop_steps(vertex)):
                for rest in walks(target, length - 1):
                    yield (target,) + rest
        return walks(c, self.spec.steps_per_round)

    def cop_move_legal(self, c: int, move: Move) -> bool:
        if len(move) != self.spec.steps_per_round:
            return False
        previous = c
        for target in move:
            if not 0 <= target < self.g.n or \
                    not self.cop_steps(previous) >> target & 1:
                return False
            previous = target
        return True

    def advance(self, cop: int, reachable: int) -> int:
        """One cop step: drop the robber positions the cop captures from
        `reachable`, then let the others move."""
        result = 0
        for p in iter_bits(reachable):
            if not self.captures(cop, p):
                result |= self.robber_steps(p, cop)
        return result

    def phase_sets(self, r: int, move: Move) -> List[int]:
        """Robber-reachable sets after each cop step of `move`.

        Entry i holds the positions the robber may occupy after the cop's
        (i+1)-th step and his own reply; an empty set means captured.
        """
        reachable = 1 << r
        sets = []
        for cop in move:
            reachable = self.advance(cop, reachable)
            sets.append(reachable)
        return sets

    def solve(self) -> GameValue:
        n = self.g.n
        logger.info("Solving %s game on %d vertices", self.spec.variant.value,
                    n)
        labels = [[0] * n for _ in range(n)]
        won = []
        for c in range(n):
            mask = self.immediate_mask(c) & ~(1 << c)
            for r in iter_bits(mask):
                labels[c][r] = 1
            won.append(mask)
        level = 1
        while True:
            fresh = [mask & ~won[c] & ~(1 << c)
                     for c, mask in enumerate(self.round_masks(won))]
            if not any(fresh):
                break
            level += 1
            for c in range(n):
                for r in iter_bits(fresh[c]):
                    labels[c][r] = level
                won[c] |= fresh[c]
            logger.debug("Level %d adds %d configurations", level,
                         sum(bin(mask).count("1") for mask in fresh))
        value = GameValue(spec=self.spec, n=n,
                          labels=tuple(tuple(row) for row in labels),
                          rounds=level)
        logger.info("Verdict %s after %d levels", value.verdict.value, level)
        return value


class MoveSolver(BaseSolver):
    """Rounds made of one cop move followed by one robber move."""

    def round_masks(self, won):
        n = self.g.n
        # robber positions that every reply keeps inside `won` once the
        # cop has landed on target
        trapped = []
        for target in range(n):
            mask = 0
            for r in range(n):
                if not self.captures(target, r) and \
                        self.robber_steps(r, target) & ~won[target] == 0:
                    mask |= 1 << r
            trapped.append(mask)
        result = []
        for c in range(n):
            mask = 0
            for target in iter_bits(self.cop_steps(c)):
                mask |= trapped[target]
            result.append(mask)
        return result
