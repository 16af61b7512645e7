from ..graph.core import Graph, Radius
from .base_solver import MoveSolver
from .value import GameSpec, GameValue, Variant


class VisibleSolver(MoveSolver):
    """Cop of speed s' against a robber of speed s, both always visible.

    The cop captures by landing on the robber; the robber's path may not
    pass through the cop's vertex.
    """
    variant = Variant.VISIBLE

    def immediate_mask(self, c):
        return self.g.ball_mask(c, self.spec.s_prime)

    def cop_steps(self, c):
        return self.g.ball_mask(c, self.spec.s_prime)

    def robber_steps(self, p, cop):
        return self.g.reach(p, self.spec.s, removed=1 << cop)

    def captures(self, cop, robber):
        return cop == robber


def solve_visible(g: Graph, s: Radius = 1, s_prime: Radius = 1) -> GameValue:
    return VisibleSolver(g, GameSpec.visible(s, s_prime)).solve()
