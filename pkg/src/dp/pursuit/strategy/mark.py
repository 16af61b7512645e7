"""
Marking of witness-game configurations by oscillating plans.

A configuration (c, r) with r outside N1(c) gets label l+1 when the cop
can step to some y in N1(c) and oscillate between y and a neighbour x of
y so that every vertex the robber can reach in k moves while avoiding x
and y leads to a configuration (y, z) labelled at most l.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple

from ..errors import StrategyError
from ..game.value import GameSpec
from ..graph.core import Graph
from ..utils import get_logger, iter_bits, tuple_to_bits
from .table import Configuration, StrategyTable

logger = get_logger(__name__)


@dataclass
class MarkTable:
    X: Tuple[int, ...]
    k: int
    label: Dict[Configuration, int] = field(default_factory=dict)
    x_of: Dict[Configuration, int] = field(default_factory=dict)
    y_of: Dict[Configuration, int] = field(default_factory=dict)

    def configurations(self):
        return [(c, r) for c in self.X for r in self.X if c != r]

    @property
    def complete(self) -> bool:
        return all(conf in self.label for conf in self.configurations())

    def unmarked(self):
        return [conf for conf in self.configurations()
                if conf not in self.label]

    def to_dict(self):
        return {
            "X": list(self.X),
            "k": self.k,
            "complete": self.complete,
            "marks": [{"cop": c, "robber": r, "label": label,
                       "x": self.x_of.get((c, r)), "y": self.y_of.get((c, r))}
                      for (c, r), label in sorted(self.label.items())],
        }


def mark_procedure(g: Graph, X: Iterable[int], k: int) -> MarkTable:
    X = tuple(sorted(set(X)))
    inside = tuple_to_bits(X)
    table = MarkTable(X=X, k=k)
    for c, r in table.configurations():
        if g.closed_mask(c) >> r & 1:
            table.label[(c, r)] = 1
    level = 1
    while True:
        fresh = {}
        for c, r in table.unmarked():
            pair = _find_pair(g, table, inside, c, r, level)
            if pair is not None:
                fresh[(c, r)] = pair
        if not fresh:
            break
        level += 1
        for conf, (x, y) in fresh.items():
            table.label[conf] = level
            table.x_of[conf] = x
            table.y_of[conf] = y
    logger.debug("Mark(k=%d) labelled %d of %d configurations", k,
                 len(table.label), len(table.configurations()))
    return table


def _find_pair(g, table, inside, c, r, level):
    for y in iter_bits(g.closed_mask(c) & inside):
        for x in iter_bits(g.closed_mask(y) & inside & ~(1 << r)):
            escapes = g.reach(r, table.k, removed=(1 << x) | (1 << y)) \
                & inside
            if all(0 < table.label.get((y, z), 0) <= level
                   for z in iter_bits(escapes)):
                return x, y
    return None


def oscillation(x: int, y: int, k: int):
    """y, x, y, ..., y over k steps (k odd)."""
    return tuple(y if i % 2 == 0 else x for i in range(k))


def mark_strategy(g: Graph, table: MarkTable) -> StrategyTable:
    if table.k % 2 == 0:
        raise StrategyError("oscillating plans end on y only for odd k")
    if not table.complete:
        raise StrategyError("%d configurations are unmarked"
                            % len(table.unmarked()))
    moves = {}
    for c, r in table.configurations():
        if table.label[(c, r)] == 1:
            moves[(c, r)] = (r,) * table.k
        else:
            moves[(c, r)] = oscillation(table.x_of[(c, r)],
                                        table.y_of[(c, r)], table.k)
    return StrategyTable(game=GameSpec.witness(table.k), start_vertex=table.X[0],
                         moves=moves)
