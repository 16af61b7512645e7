"""
Graph files.

Edge-list text: optional '#' comment lines, a header line "n m", then m
lines "u v" with 0-based endpoints. A file whose first data line is a
single token is read as graph6, one graph per line.
"""
import sys
from typing import List

from ..corpus.graph6 import from_graph6
from ..errors import GraphFileError
from ..graph.core import Graph, build


def _data_lines(text: str) -> List[str]:
    return [line.strip() for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")]


def is_graph6(text: str) -> bool:
    lines = _data_lines(text)
    return bool(lines) and len(lines[0].split()) == 1


def parse_edge_list(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines:
        raise GraphFileError("empty graph file")
    try:
        n, m = (int(field) for field in lines[0].split())
    except ValueError:
        raise GraphFileError("header must be 'n m', got %r" % lines[0])
    if n < 0 or m < 0:
        raise GraphFileError("negative counts in header %r" % lines[0])
    if len(lines) - 1 != m:
        raise GraphFileError("header announces %d edges, file has %d"
                             % (m, len(lines) - 1))
    edges = []
    for line in lines[1:]:
        try:
            u, v = (int(field) for field in line.split())
        except ValueError:
            raise GraphFileError("edge line must be 'u v', got %r" % line)
        edges.append((u, v))
    return build(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = ["%d %d" % (g.n, len(g.edges()))]
    lines += ["%d %d" % edge for edge in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graphs(text: str) -> List[Graph]:
    if is_graph6(text):
        return [from_graph6(line) for line in _data_lines(text)]
    return [parse_edge_list(text)]


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r") as f:
            return f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise GraphFileError("cannot read %s: %s" % (path, e))


def read_graphs(path: str) -> List[Graph]:
    return parse_graphs(read_text(path))


def read_graph(path: str) -> Graph:
    graphs = read_graphs(path)
    if len(graphs) != 1:
        raise GraphFileError("%s holds %d graphs, expected one"
                             % (path, len(graphs)))
    return graphs[0]
