"""
Strategies along big brother and big two-brother decompositions.
"""
from typing import Optional

from ..decomposition.types import Decomposition, Kind
from ..decomposition.verify import verify_decomposition
from ..errors import StrategyError
from ..game.value import GameSpec
from ..graph.core import UNBOUNDED, Graph, Radius
from .table import StrategyTable


def _check(g: Graph, d: Decomposition, kind: Kind) -> Decomposition:
    if kind == Kind.BIG_TWO_BROTHER and d.kind == Kind.BIG_BROTHER:
        d = d.as_big_two_brother()
    if d.kind != kind:
        raise StrategyError("expected a %s decomposition, got %s"
                            % (kind.value, d.kind.value))
    if not verify_decomposition(g, d):
        raise StrategyError("decomposition does not verify")
    return d


def step_towards(g: Graph, c: int, target: int) -> int:
    if c == target:
        return c
    return min(u for u in g.neighbors(c)
               if g.dist[u][target] == g.dist[c][target] - 1)


def bb_strategy(g: Graph, d: Decomposition,
                s: Radius = UNBOUNDED) -> StrategyTable:
    """Start on the root's big brother, then always step to the neighbour
    closest to the robber."""
    d = _check(g, d, Kind.BIG_BROTHER)
    moves = {}
    for c in range(g.n):
        for r in range(g.n):
            if c == r:
                continue
            if g.adjacent(c, r):
                moves[(c, r)] = (r,)
            else:
                moves[(c, r)] = (min(g.neighbors(c),
                                     key=lambda u: (g.dist[u][r], u)),)
    return StrategyTable(game=GameSpec.visible(s, 1),
                         start_vertex=d.big_brother[0], moves=moves)


def robber_path(d: Decomposition, r: int):
    """Pieces from the root to the deepest piece holding r."""
    holders = [i for i, piece in enumerate(d.pieces) if r in piece]
    deepest = min(holders, key=lambda i: (-d.depth(i), i))
    return d.path_from_root(deepest)


def _vertex_gate(d: Decomposition, j: int) -> bool:
    x, y = d.small_brother[j], d.big_brother[j]
    return x != y and not any(y in piece for piece in d.pieces[:j])


def gate_plan(d: Decomposition, j: int, k: int):
    x, y = d.small_brother[j], d.big_brother[j]
    if x == y:
        return (y,) * k
    if _vertex_gate(d, j):
        # with k == 1 the step to y is played next round, from memory
        return (x,) if k == 1 else (x,) * (k - 1) + (y,)
    # edge gate: alternate so the last step lands on y
    return tuple(y if (k - t) % 2 == 0 else x for t in range(1, k + 1))


def _memory_move(g: Graph, d: Decomposition, c: int, r: int
                 ) -> Optional[int]:
    for j in robber_path(d, r)[1:]:
        if d.small_brother[j] == c and _vertex_gate(d, j):
            return d.big_brother[j]
    return None


def btb_witness_strategy(g: Graph, d: Decomposition, k: int
                         ) -> StrategyTable:
    d = _check(g, d, Kind.BIG_TWO_BROTHER)
    root = d.big_brother[0]
    moves, memory_moves, memory_bits = {}, {}, {}
    for c in range(g.n):
        for r in range(g.n):
            if c == r:
                continue
            if g.closed_mask(c) >> r & 1:
                moves[(c, r)] = (r,) * k
                memory_moves[(c, r)] = (r,) * k
                continue
            path = robber_path(d, r)
            guarded = [p for p, i in enumerate(path)
                       if d.big_brother[i] == c]
            if not guarded or guarded[-1] == len(path) - 1:
                walk, at = [], c
                for _ in range(k):
                    at = step_towards(g, at, root)
                    walk.append(at)
                moves[(c, r)] = tuple(walk)
            else:
                j = path[guarded[-1] + 1]
                moves[(c, r)] = gate_plan(d, j, k)
                if k == 1 and _vertex_gate(d, j):
                    memory_bits[(c, r)] = 1
            if k == 1:
                target = _memory_move(g, d, c, r)
                if target is not None:
                    memory_moves[(c, r)] = (target,)
    return StrategyTable(game=GameSpec.witness(k), start_vertex=root,
                         moves=moves, memory_moves=memory_moves,
                         memory_bits=memory_bits)
