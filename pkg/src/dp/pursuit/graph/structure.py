from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

import networkx as nx

from ..errors import DisconnectedGraphError, EmptyVertexSetError
from ..utils import iter_bits, tuple_to_bits
from .core import Graph


def components(g: Graph, within: Optional[int] = None
               ) -> List[Tuple[int, ...]]:
    """Connected components, each ascending, ordered by smallest vertex.

    With `within` only the subgraph induced by that vertex mask counts.
    """
    graph = g.to_networkx()
    if within is not None:
        graph = graph.subgraph(iter_bits(within))
    return sorted(tuple(sorted(c)) for c in nx.connected_components(graph))


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def require_connected(g: Graph, operation: str) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("%s needs a connected graph" % operation)


def bipartition(g: Graph) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """2-colouring with the smallest vertex of each component on side 0."""
    colour = [-1] * g.n
    for source in range(g.n):
        if colour[source] != -1:
            continue
        colour[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    return (tuple(v for v in range(g.n) if colour[v] == 0),
            tuple(v for v in range(g.n) if colour[v] == 1))


@dataclass
class BlockCutTree:
    blocks: List[Tuple[int, ...]]
    articulations: Tuple[int, ...]
    # (block index, articulation vertex) pairs
    tree_edges: List[Tuple[int, int]] = field(default_factory=list)

    def blocks_of(self, v: int) -> List[int]:
        return [i for i, block in enumerate(self.blocks) if v in block]

    def to_dict(self):
        return {
            "blocks": [list(b) for b in self.blocks],
            "articulations": list(self.articulations),
            "tree_edges": [list(e) for e in self.tree_edges],
        }


def blocks_and_articulations(g: Graph) -> BlockCutTree:
    require_connected(g, "blocks_and_articulations")
    if g.n == 1:
        return BlockCutTree(blocks=[(0,)], articulations=())
    graph = g.to_networkx()
    blocks = sorted(tuple(sorted(b)) for b in nx.biconnected_components(graph))
    articulations = tuple(sorted(nx.articulation_points(graph)))
    tree_edges = [(i, a) for i, block in enumerate(blocks)
                  for a in articulations if a in block]
    return BlockCutTree(blocks=blocks, articulations=articulations,
                        tree_edges=tree_edges)


def dominating_mask(g: Graph, mask: int) -> Optional[int]:
    for u in iter_bits(mask):
        if mask & ~g.closed_mask(u) == 0:
            return u
    return None


def dominating_vertex(g: Graph, vertices: Iterable[int]) -> Optional[int]:
    mask = tuple_to_bits(vertices)
    if mask == 0:
        raise EmptyVertexSetError("dominating_vertex of an empty set")
    return dominating_mask(g, mask)
