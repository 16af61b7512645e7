from .core import (UNBOUNDED, Graph, Radius, ball, build, format_radius,
                   parse_radius, punctured_ball, two_punctured_ball)
from .structure import (BlockCutTree, bipartition, blocks_and_articulations,
                        components, dominating_vertex, is_connected,
                        require_connected)

__all__ = [
    "UNBOUNDED",
    "Graph",
    "Radius",
    "ball",
    "build",
    "format_radius",
    "parse_radius",
    "punctured_ball",
    "two_punctured_ball",
    "BlockCutTree",
    "bipartition",
    "blocks_and_articulations",
    "components",
    "dominating_vertex",
    "is_connected",
    "require_connected",
]
