"""Zigzag decomposition of the triangles of a 4-regular graph.

Triangles sharing an edge are linked; in a descendant of K5 the linked
components are paths (zigzags Z_z*) or, for a 1-zigzag, a single cycle.
Zigzags meet only at end vertices and so form open or closed chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .canonical import canonical_form
from .chain_rewrite import ChainVector, normalize
from .dt_ops import DteSite
from .errors import MixedChains, NotZigzagPartitionable, SwapConventionUnsatisfiable
from .graph import Graph, is_four_regular, iter_bits, one_zigzag, triangles


@dataclass(frozen=True)
class ZigzagPiece:
    triangles: tuple[tuple[int, int, int], ...]
    ends: tuple[int, ...]
    chords: tuple[int, ...]
    internal: tuple[int, ...]
    closed: bool = False

    @property
    def length(self) -> int:
        return len(self.triangles)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for t in self.triangles for v in t)


@dataclass(frozen=True)
class Chain:
    pieces: tuple[int, ...]
    closed: bool


@dataclass(frozen=True)
class ZigzagDecomposition:
    pieces: tuple[ZigzagPiece, ...]
    shared_ends: tuple[int, ...]
    non_triangle_vertices: tuple[int, ...]
    chains: tuple[Chain, ...]

    @property
    def k(self) -> int:
        return len(self.pieces)

    @property
    def ell(self) -> int:
        return len(self.shared_ends)

    @property
    def m(self) -> int:
        return len(self.non_triangle_vertices)

    def level_formula(self) -> int:
        return 2 * self.k - self.ell + self.m


def _order_component(comp: list[int], links: dict[int, list[int]]) -> tuple[list[int], bool]:
    if len(comp) == 1:
        return comp, False
    ends = [t for t in comp if len(links[t]) == 1]
    closed = not ends
    cur = comp[0] if closed else min(ends)
    order = [cur]
    visited = {cur}
    while True:
        nxt = [t for t in links[cur] if t not in visited]
        if not nxt:
            break
        cur = min(nxt)
        order.append(cur)
        visited.add(cur)
    if len(order) != len(comp):
        raise NotZigzagPartitionable("triangle links do not form a path or cycle")
    return order, closed


def _piece_degrees(tris: list[tuple[int, int, int]]) -> dict[int, int]:
    edges = set()
    for a, b, c in tris:
        edges.update({(a, b), (a, c), (b, c)})
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return deg


@lru_cache(maxsize=4096)
def zigzag_decomposition(g: Graph) -> ZigzagDecomposition:
    tris = triangles(g)
    on_edge: dict[tuple[int, int], list[int]] = {}
    for idx, (a, b, c) in enumerate(tris):
        for e in ((a, b), (a, c), (b, c)):
            on_edge.setdefault(e, []).append(idx)
    links: dict[int, list[int]] = {i: [] for i in range(len(tris))}
    for e, owners in on_edge.items():
        if len(owners) > 2:
            raise NotZigzagPartitionable(f"edge {e} lies in {len(owners)} triangles")
        if len(owners) == 2:
            a, b = owners
            links[a].append(b)
            links[b].append(a)
    for t, adj in links.items():
        if len(adj) > 2:
            raise NotZigzagPartitionable(f"triangle {tris[t]} shares edges with {len(adj)} triangles")

    seen: set[int] = set()
    raw_pieces = []
    for t in range(len(tris)):
        if t in seen:
            continue
        comp = []
        stack = [t]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            comp.append(u)
            stack.extend(links[u])
        order, closed = _order_component(sorted(comp), links)
        raw_pieces.append(([tris[i] for i in order], closed))

    owners: dict[int, list[int]] = {}
    for p, (ptris, _) in enumerate(raw_pieces):
        for v in {v for tri in ptris for v in tri}:
            owners.setdefault(v, []).append(p)
    shared = sorted(v for v, ps in owners.items() if len(ps) >= 2)
    if any(len(owners[v]) > 2 for v in shared):
        raise NotZigzagPartitionable("a vertex lies in three zigzags")

    pieces = []
    for p, (ptris, closed) in enumerate(raw_pieces):
        verts = {v for tri in ptris for v in tri}
        mine = [v for v in shared if p in owners[v]]
        deg = _piece_degrees(ptris)
        z = len(ptris)
        if closed:
            if len(verts) != z or mine:
                raise NotZigzagPartitionable("cyclic zigzag is not a whole 1-zigzag component")
            pieces.append(ZigzagPiece(tuple(ptris), (), (), tuple(sorted(verts)), True))
            continue
        if len(verts) != z + 2:
            raise NotZigzagPartitionable(f"zigzag of length {z} spans {len(verts)} vertices")
        if z == 1:
            if len(mine) > 2:
                raise NotZigzagPartitionable("lone triangle shared at all three corners")
            ends = tuple(mine) + tuple(v for v in sorted(verts) if v not in mine)[: 2 - len(mine)]
        else:
            first = set(ptris[0]) - set(ptris[1])
            last = set(ptris[-1]) - set(ptris[-2])
            ends = (first.pop(), last.pop())
            if any(v not in ends for v in mine):
                raise NotZigzagPartitionable("zigzags meet away from their ends")
        chords = tuple(sorted(v for v in verts if deg[v] == 3 and v not in ends))
        internal = tuple(sorted(v for v in verts if deg[v] >= 4))
        pieces.append(ZigzagPiece(tuple(ptris), ends, chords, internal, False))

    # chains: pieces linked through shared end vertices
    plinks: dict[int, list[int]] = {p: [] for p in range(len(pieces))}
    for v in shared:
        a, b = owners[v]
        plinks[a].append(b)
        plinks[b].append(a)
    chains = []
    done: set[int] = set()
    for p in range(len(pieces)):
        if p in done:
            continue
        if pieces[p].closed:
            chains.append(Chain((p,), True))
            done.add(p)
            continue
        comp = []
        stack = [p]
        while stack:
            u = stack.pop()
            if u in done:
                continue
            done.add(u)
            comp.append(u)
            stack.extend(plinks[u])
        comp.sort()
        free = [u for u in comp if len(plinks[u]) < 2]
        closed = not free
        start = min(free) if free else comp[0]
        order = [start]
        prev = None
        while len(order) < len(comp):
            options = [u for u in plinks[order[-1]] if u not in order]
            if not options:
                raise NotZigzagPartitionable("zigzag chain branches")
            order.append(min(options))
        chains.append(Chain(tuple(order), closed))

    in_tri = set(owners)
    non_tri = tuple(v for v in range(g.n) if v not in in_tri)
    return ZigzagDecomposition(tuple(pieces), tuple(shared), non_tri, tuple(chains))


def level(g: Graph) -> int:
    return g.n - len(triangles(g))


def chain_vector(g: Graph) -> ChainVector:
    """Zigzag lengths along chains: one closed chain, or open chains each
    terminated by a 0."""
    dec = zigzag_decomposition(g)
    closed = [c for c in dec.chains if c.closed]
    if closed:
        if len(dec.chains) > 1:
            raise MixedChains(f"{len(closed)} closed chain(s) among {len(dec.chains)} chains")
        return normalize([dec.pieces[p].length for p in closed[0].pieces], closed=True)
    raw: list[int] = []
    for c in dec.chains:
        raw.extend(dec.pieces[p].length for p in c.pieces)
        raw.append(0)
    return normalize(raw, closed=False)


def chain_vector_or_none(g: Graph) -> Optional[ChainVector]:
    try:
        return chain_vector(g)
    except (MixedChains, NotZigzagPartitionable):
        return None


def is_one_zigzag(g: Graph) -> bool:
    if g.n < 5 or not is_four_regular(g):
        return False
    return canonical_form(g) == canonical_form(one_zigzag(g.n))


@dataclass(frozen=True, order=True)
class DteType:
    a: int
    b: int
    c: int

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def _type_for(g: Graph, far: int, near: int, apex: int, pendant: int) -> DteType:
    adj = g.adj
    hmask = (1 << far) | (1 << near) | (1 << apex) | (1 << pendant)
    a = int(bool(adj[apex] & adj[pendant] & ~hmask))
    b = int(bool(adj[far] & adj[near] & ~hmask))
    c = int(g.has_edge(near, pendant))
    return DteType(a, b, c)


def classify_dte_site(g: Graph, site: DteSite) -> DteType:
    """Type (a, b, c) of expanding ``site``.

    The two non-apex corners are named so that the "far" corner has no common
    neighbour with the apex besides the "near" corner.  Then ``a`` flags a
    triangle on the pendant edge, ``b`` a second triangle on the far-near edge
    and ``c`` the edge near-pendant.
    """
    zigzag_decomposition(g)
    x, y = site.others()
    apex, pendant = site.apex, site.pendant
    found = []
    for far, near in ((x, y), (y, x)):
        if (g.adj[far] & g.adj[apex]) & ~(1 << near) == 0:
            found.append(_type_for(g, far, near, apex, pendant))
    if not found:
        raise SwapConventionUnsatisfiable(
            f"both corners of {site.triangle} share a second neighbour with apex {apex}"
        )
    return min(found)
