__version__ = "0.1.0"

from .game import GameSpec, GameValue, solve_capture, solve_visible, \
    solve_witness
from .graph import UNBOUNDED, Graph, build

__all__ = [
    "__version__",
    "GameSpec",
    "GameValue",
    "Graph",
    "UNBOUNDED",
    "build",
    "solve_capture",
    "solve_visible",
    "solve_witness",
]
