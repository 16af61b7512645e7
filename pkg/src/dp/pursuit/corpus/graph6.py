from typing import Iterable, List

import networkx as nx

from ..errors import GraphFileError
from ..graph.core import Graph, build


def from_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise GraphFileError("empty graph6 line")
    try:
        nx_graph = nx.from_graph6_bytes(text.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        raise GraphFileError("bad graph6 line %r: %s" % (text, e))
    return build(nx_graph.number_of_nodes(), sorted(
        (min(u, v), max(u, v)) for u, v in nx_graph.edges()))


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode(
        "ascii").strip()


def read_graph6(lines: Iterable[str]) -> List[Graph]:
    return [from_graph6(line) for line in lines
            if line.strip() and not line.startswith("#")]
