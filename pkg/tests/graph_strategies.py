from hypothesis import strategies as st

from dp.pursuit.graph import build


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    """Random connected graph: a random spanning tree plus extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((u, v))
    others = [(u, v) for u in range(n) for v in range(u + 1, n)
              if (u, v) not in edges]
    if others:
        edges |= set(draw(st.lists(st.sampled_from(others), unique=True)))
    return build(n, sorted(edges))


@st.composite
def connected_bipartite_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    side = [0] + [draw(st.integers(0, 1)) for _ in range(n - 1)]
    edges = set()
    for v in range(1, n):
        # tree edge to an earlier vertex of the other side, if any
        candidates = [u for u in range(v) if side[u] != side[v]]
        if not candidates:
            side[v] = 1 - side[v]
            candidates = [u for u in range(v) if side[u] != side[v]]
        edges.add((draw(st.sampled_from(candidates)), v))
    others = [(u, v) for u in range(n) for v in range(u + 1, n)
              if side[u] != side[v] and (u, v) not in edges]
    if others:
        edges |= set(draw(st.lists(st.sampled_from(others), unique=True)))
    return build(n, sorted(edges))
