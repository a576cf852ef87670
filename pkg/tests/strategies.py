"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from dtdesc.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=9, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    rows = [0] * n
    for (u, v), k in zip(pairs, keep):
        if k:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


@st.composite
def connected_graphs(draw, min_n=3, max_n=8):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    rows = [0] * n
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not rows[u] >> v & 1]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    for (u, v), k in zip(pairs, keep):
        if k:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def to_networkx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
