from typing import Optional

from ..errors import StrategyError
from ..game.policy import CopPolicy, RobberPolicy, make_solver
from ..game.value import GameSpec
from ..graph.core import Graph
from ..utils import get_logger
from .table import Outcome, Trace

logger = get_logger(__name__)


def default_cap(g: Graph, spec: GameSpec) -> int:
    return 4 * g.n * g.n * spec.steps_per_round


def simulate(g: Graph, spec: GameSpec, cop: CopPolicy, robber: RobberPolicy,
             cap: Optional[int] = None, cop_start: Optional[int] = None,
             robber_start: Optional[int] = None) -> Trace:
    """Replay cop against robber under the rules of `spec`.

    `cap` bounds the number of cop moves. Illegal moves by either side
    raise StrategyError.
    """
    if cop.spec != spec:
        raise StrategyError("cop strategy is for %s, not %s"
                            % (cop.spec.to_dict(), spec.to_dict()))
    if cap is None:
        cap = default_cap(g, spec)
    solver = make_solver(g, spec, force=True)
    if hasattr(cop, "reset"):
        cop.reset()
    c = cop.start() if cop_start is None else cop_start
    if g.n == 1:
        return Trace(spec, [c], [c], Outcome.CAPTURED, 0, cap)
    r = robber.start(c) if robber_start is None else robber_start
    if not (0 <= c < g.n and 0 <= r < g.n) or c == r:
        raise StrategyError("illegal start positions cop=%d robber=%d"
                            % (c, r))
    cops, robbers = [c], [r]
    steps = 0
    while steps < cap:
        move = tuple(cop.move(c, r))
        if not solver.cop_move_legal(c, move):
            raise StrategyError("illegal cop move %s from %d" % (move, c))
        trajectory = tuple(robber.reply(c, r, move))
        if len(trajectory) != len(move):
            raise StrategyError("robber replied %d positions to a %d-step "
                                "move" % (len(trajectory), len(move)))
        for at, answer in zip(move, trajectory):
            steps += 1
            cops.append(at)
            if solver.captures(at, r):
                robbers.append(r)
                logger.debug("Captured after %d cop moves", steps)
                return Trace(spec, cops, robbers, Outcome.CAPTURED, steps,
                             cap)
            if not solver.robber_steps(r, at) >> answer & 1:
                raise StrategyError("illegal robber move %d -> %d with the "
                                    "cop on %d" % (r, answer, at))
            r = answer
            robbers.append(r)
        c = move[-1]
    logger.debug("Robber survived %d cop moves", steps)
    return Trace(spec, cops, robbers, Outcome.SURVIVED, steps, cap)
