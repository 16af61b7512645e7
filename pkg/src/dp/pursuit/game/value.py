"""
Game descriptions and solved game values.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ..errors import GameSpecError
from ..graph.core import UNBOUNDED, Radius, format_radius


class Variant(str, Enum):
    VISIBLE = "visible"
    WITNESS = "witness"
    CAPTURE_RADIUS = "capture"


class Winner(str, Enum):
    COP = "COP"
    ROBBER = "ROBBER"


def _check_speed(name: str, value: Radius):
    if value != UNBOUNDED and (int(value) != value or value < 1):
        raise GameSpecError("%s must be a positive integer or inf, got %r"
                            % (name, value))


@dataclass(frozen=True)
class GameSpec:
    variant: Variant
    s: Radius = 1
    s_prime: Radius = 1
    k: int = 1
    radius: int = 0

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        _check_speed("s", self.s)
        _check_speed("s_prime", self.s_prime)
        if self.variant == Variant.WITNESS:
            if self.s_prime != 1:
                raise GameSpecError("the witness game has a unit-speed cop")
            if int(self.k) != self.k or self.k < 1:
                raise GameSpecError("k must be a positive integer, got %r"
                                    % self.k)
        elif self.k != 1:
            raise GameSpecError("k only applies to the witness game")
        if self.variant == Variant.CAPTURE_RADIUS:
            if self.s != 1 or self.s_prime != 1:
                raise GameSpecError("the capture-radius game has unit "
                                    "speeds")
            if int(self.radius) != self.radius or self.radius < 0:
                raise GameSpecError("radius must be a non-negative integer, "
                                    "got %r" % self.radius)
        elif self.radius != 0:
            raise GameSpecError("radius only applies to the capture-radius "
                                "game")

    @classmethod
    def visible(cls, s: Radius = 1, s_prime: Radius = 1) -> "GameSpec":
        return cls(Variant.VISIBLE, s=s, s_prime=s_prime)

    @classmethod
    def witness(cls, k: int, s: Radius = 1) -> "GameSpec":
        return cls(Variant.WITNESS, s=s, k=k)

    @classmethod
    def capture(cls, radius: int) -> "GameSpec":
        return cls(Variant.CAPTURE_RADIUS, radius=radius)

    @property
    def steps_per_round(self) -> int:
        return self.k if self.variant == Variant.WITNESS else 1

    def to_dict(self):
        return {
            "variant": self.variant.value,
            "s": format_radius(self.s),
            "s_prime": format_radius(self.s_prime),
            "k": self.k,
            "radius": self.radius,
        }


@dataclass
class GameValue:
    """Solved configuration space.

    Configurations are (cop vertex, robber vertex) pairs at the moment the
    cop decides. ``labels[c][r]`` is the fixpoint level at which the cop
    wins from (c, r): 1 for an immediate capture, 0 when the robber wins.
    Coinciding positions count as already captured (label 0, COP).
    """
    spec: GameSpec
    n: int
    labels: Tuple[Tuple[int, ...], ...]
    rounds: int

    def label(self, c: int, r: int) -> int:
        return self.labels[c][r]

    def winner(self, c: int, r: int) -> Winner:
        if c == r or self.labels[c][r] > 0:
            return Winner.COP
        return Winner.ROBBER

    def cop_wins_from(self, c: int) -> bool:
        return all(self.labels[c][r] > 0 for r in range(self.n) if r != c)

    @property
    def best_start(self) -> Optional[int]:
        for c in range(self.n):
            if self.cop_wins_from(c):
                return c
        return None

    @property
    def verdict(self) -> Winner:
        return Winner.COP if self.best_start is not None else Winner.ROBBER

    def to_dict(self, dump_value=False):
        result = {
            "spec": self.spec.to_dict(),
            "n": self.n,
            "verdict": self.verdict.value,
            "best_start": self.best_start,
            "rounds": self.rounds,
        }
        if dump_value:
            result["configurations"] = [
                {"cop": c, "robber": r, "winner": self.winner(c, r).value,
                 "label": self.labels[c][r]}
                for c in range(self.n) for r in range(self.n) if c != r]
        return result
