from ..graph.core import Graph
from .base_solver import MoveSolver
from .value import GameSpec, GameValue, Variant


class CaptureSolver(MoveSolver):
    """Unit speeds; the cop wins once his move brings him within the
    capture radius. The robber may not step onto the cop."""
    variant = Variant.CAPTURE_RADIUS

    def immediate_mask(self, c):
        return self.g.ball_mask(c, self.spec.radius + 1)

    def cop_steps(self, c):
        return self.g.closed_mask(c)

    def robber_steps(self, p, cop):
        return self.g.closed_mask(p) & ~(1 << cop)

    def captures(self, cop, robber):
        return self.g.dist[cop][robber] <= self.spec.radius


def solve_capture(g: Graph, radius: int) -> GameValue:
    return CaptureSolver(g, GameSpec.capture(radius)).solve()
