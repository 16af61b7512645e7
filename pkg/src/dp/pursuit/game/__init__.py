from .base_solver import BaseSolver, MoveSolver
from .capture import CaptureSolver, solve_capture
from .policy import (CopPolicy, OptimalCopPolicy, OptimalRobberPolicy,
                     RobberPolicy, extract_optimal_policies, make_solver)
from .value import GameSpec, GameValue, Variant, Winner
from .visible import VisibleSolver, solve_visible
from .witness import WitnessSolver, solve_witness

solver_dict = {
    "visible": VisibleSolver,
    "witness": WitnessSolver,
    "capture": CaptureSolver,
}

__all__ = [
    "BaseSolver",
    "MoveSolver",
    "CaptureSolver",
    "VisibleSolver",
    "WitnessSolver",
    "GameSpec",
    "GameValue",
    "Variant",
    "Winner",
    "CopPolicy",
    "RobberPolicy",
    "OptimalCopPolicy",
    "OptimalRobberPolicy",
    "extract_optimal_policies",
    "make_solver",
    "solve_capture",
    "solve_visible",
    "solve_witness",
    "solver_dict",
]
