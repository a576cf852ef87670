"""Small simple undirected graphs stored as integer bitrows.

Every operation in the package works on :class:`Graph`.  Row ``adj[u]`` is an
int whose bit ``v`` is set iff ``{u, v}`` is an edge.  Graphs are immutable;
anything that changes a graph returns a new one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import Disconnected, DuplicateEdge, LoopEdge, OutOfRange, TooLarge

MAX_VERTICES = 64
MAX_CUT_SCAN = 30


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise OutOfRange(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; rejects loops, repeats and bad labels."""
    if not 0 <= n <= MAX_VERTICES:
        raise OutOfRange(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has a vertex outside [0, {n})")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if rows[u] >> v & 1:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(rows: Sequence[int]) -> Graph:
    return Graph(len(rows), tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    edges = set()
    for i in range(n):
        for j in jumps:
            a, b = i, (i + j) % n
            if a != b:
                edges.add((min(a, b), max(a, b)))
    return make_graph(n, sorted(edges))


def one_zigzag(n: int) -> Graph:
    """The circulant C_n(1,2); for n = 5 and 6 this is K5 and the octahedron."""
    return circulant(n, (1, 2))


def octahedron() -> Graph:
    return circulant(6, (1, 2))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    rows = [0] * g.n
    for u in range(g.n):
        row = 0
        for v in iter_bits(g.adj[u]):
            row |= 1 << perm[v]
        rows[perm[u]] = row
    return Graph(g.n, tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    low = (1 << v) - 1
    rows = []
    for u in range(g.n):
        if u == v:
            continue
        row = g.adj[u]
        rows.append((row & low) | ((row >> (v + 1)) << v))
    return Graph(g.n - 1, tuple(rows))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        row = 0
        for w in iter_bits(g.adj[v]):
            if w in index:
                row |= 1 << index[w]
        rows.append(row)
    return Graph(len(vertices), tuple(rows))


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All vertex triples ``i < j < k`` spanning a triangle."""
    out = []
    adj = g.adj
    for i in range(g.n):
        higher = adj[i] >> (i + 1) << (i + 1)
        for j in iter_bits(higher):
            common = higher & adj[j] >> (j + 1) << (j + 1)
            for k in iter_bits(common):
                out.append((i, j, k))
    return out


def triangle_count(g: Graph) -> int:
    return len(triangles(g))


def is_four_regular(g: Graph) -> bool:
    return all(row.bit_count() == 4 for row in g.adj)


def component_of(g: Graph, start: int, blocked: int = 0) -> int:
    """Bitmask of the component containing ``start`` in ``g`` minus ``blocked``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen & ~blocked
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, blocked: int = 0) -> list[int]:
    remaining = ((1 << g.n) - 1) & ~blocked
    out = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = component_of(g, start, blocked)
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return component_of(g, 0) == (1 << g.n) - 1


@dataclass(frozen=True)
class EdgeCutReport:
    passed: bool
    witness: Optional[tuple[int, ...]] = None
    cut_size: Optional[int] = None


def _cut_sizes(g: Graph, masks: np.ndarray) -> np.ndarray:
    sizes = np.zeros(masks.shape, dtype=np.int64)
    for u, v in g.edges():
        sizes += ((masks >> u) ^ (masks >> v)) & 1
    return sizes


def is_internally_six_edge_connected(g: Graph, chunk: int = 1 << 16) -> EdgeCutReport:
    """Scan every bipartition (vertex ``n-1`` on the fixed side) for small cuts.

    Passes iff each side ``S`` with ``2 <= |S| <= n-2`` is joined to the rest by
    at least six edges.  The witness is the smallest-index failing side.
    """
    if g.n > MAX_CUT_SCAN:
        raise TooLarge(f"{g.n} vertices exceeds the exhaustive cut bound {MAX_CUT_SCAN}")
    if not is_connected(g):
        raise Disconnected("edge-connectivity requires a connected graph")
    n = g.n
    if n < 4:
        return EdgeCutReport(True)
    total = 1 << (n - 1)
    for start in range(0, total, chunk):
        masks = np.arange(start, min(total, start + chunk), dtype=np.int64)
        sizes = _cut_sizes(g, masks)
        pop = np.zeros(masks.shape, dtype=np.int64)
        for v in range(n - 1):
            pop += (masks >> v) & 1
        bad = (sizes < 6) & (pop >= 2) & (pop <= n - 2)
        if bad.any():
            idx = int(np.flatnonzero(bad)[0])
            side = int(masks[idx])
            return EdgeCutReport(False, tuple(iter_bits(side)), int(sizes[idx]))
    return EdgeCutReport(True)


def vertex_three_cuts(g: Graph) -> list[tuple[int, int, int]]:
    """Every 3-subset whose deletion leaves a disconnected graph."""
    out = []
    for trio in combinations(range(g.n), 3):
        blocked = (1 << trio[0]) | (1 << trio[1]) | (1 << trio[2])
        if len(components(g, blocked)) > 1:
            out.append(trio)
    return out


def contains_k4(g: Graph) -> bool:
    for i, j, k in triangles(g):
        if g.adj[i] & g.adj[j] & g.adj[k]:
            return True
    return False


def contains_triple_triangle(g: Graph) -> bool:
    """True iff some edge lies in three or more triangles (a K_{3,1,1})."""
    for u, v in g.edges():
        if (g.adj[u] & g.adj[v]).bit_count() >= 3:
            return True
    return False
