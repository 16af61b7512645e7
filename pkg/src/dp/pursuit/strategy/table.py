from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from ..errors import StrategyError
from ..game.base_solver import Move
from ..game.policy import CopPolicy, RobberPolicy
from ..game.value import GameSpec

Configuration = Tuple[int, int]


@dataclass
class StrategyTable(CopPolicy):
    """A materialised cop strategy.

    ``moves`` maps every configuration (cop, robber) to the walk played
    from it: one vertex in the visible and capture-radius games, k
    vertices in the witness game. A configuration listed in
    ``memory_bits`` sets the memory bit once played; while the bit is set
    the cop reads ``memory_moves`` first and clears the bit.
    """
    game: GameSpec
    start_vertex: int
    moves: Dict[Configuration, Move]
    memory_moves: Dict[Configuration, Move] = field(default_factory=dict)
    memory_bits: Dict[Configuration, int] = field(default_factory=dict)

    def __post_init__(self):
        self.spec = self.game
        self._bit = 0

    def reset(self):
        self._bit = 0

    def start(self):
        return self.start_vertex

    def move(self, c, r):
        if self._bit and (c, r) in self.memory_moves:
            self._bit = 0
            return self.memory_moves[(c, r)]
        try:
            chosen = self.moves[(c, r)]
        except KeyError:
            raise StrategyError("no move for configuration (%d, %d)"
                                % (c, r))
        self._bit = self.memory_bits.get((c, r), 0)
        return chosen

    def to_dict(self):
        def encode(move):
            return move[0] if len(move) == 1 else list(move)
        return {
            "game": self.game.to_dict(),
            "start": self.start_vertex,
            "moves": [{"cop": c, "robber": r, "move": encode(m)}
                      for (c, r), m in sorted(self.moves.items())],
            "memory_moves": [{"cop": c, "robber": r, "move": encode(m)}
                             for (c, r), m in
                             sorted(self.memory_moves.items())],
        }


class Outcome(str, Enum):
    CAPTURED = "CAPTURED"
    SURVIVED = "SURVIVED"


@dataclass
class Trace:
    """Aligned positions: entry t is the state after t cop moves, and
    the robber entry is his position once he has replied (or where he was
    caught)."""
    game: GameSpec
    cop_positions: List[int]
    robber_positions: List[int]
    outcome: Outcome
    steps: int
    cap: int

    @property
    def captured(self) -> bool:
        return self.outcome == Outcome.CAPTURED

    @property
    def captured_at(self) -> Optional[int]:
        return self.steps if self.captured else None

    def to_dict(self):
        return {
            "game": self.game.to_dict(),
            "cop_positions": list(self.cop_positions),
            "robber_positions": list(self.robber_positions),
            "outcome": self.outcome.value,
            "steps": self.steps,
            "cap": self.cap,
        }


__all__ = [
    "Configuration",
    "CopPolicy",
    "Outcome",
    "RobberPolicy",
    "StrategyTable",
    "Trace",
]
