"""Double triangle expansion and reduction, completion, products, ancestors."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .canonical import CanonicalForm, canonical_form
from .errors import (
    BadDegreeSequence,
    ImproperDoubleTriangle,
    InvalidSite,
    NonTerminating,
    NotATriangle,
    WouldCreateMultiEdge,
)
from .graph import Graph, components, delete_vertex, induced_subgraph, iter_bits, triangles, vertex_three_cuts


@dataclass(frozen=True, order=True)
class DoubleTriangle:
    """Triangles (v1, v2, v3) and (v2, v3, v4) sharing the edge {v2, v3}.

    Stored with ``v2 < v3`` and ``v1 < v4``; the configuration is symmetric
    under swapping either pair.
    """

    v1: int
    v2: int
    v3: int
    v4: int
    proper: bool


@dataclass(frozen=True, order=True)
class DteSite:
    """Triangle ``triangle`` with apex ``apex`` and pendant edge {apex, pendant}."""

    triangle: tuple[int, int, int]
    apex: int
    pendant: int

    def others(self) -> tuple[int, int]:
        a, b = (v for v in self.triangle if v != self.apex)
        return a, b


def _is_proper(g: Graph, v1: int, v2: int, v3: int, v4: int) -> bool:
    common = g.adj[v2] & g.adj[v3] & ~(1 << v1) & ~(1 << v4)
    return common == 0


def find_double_triangles(g: Graph) -> list[DoubleTriangle]:
    out = []
    for u, v in g.edges():
        common = list(iter_bits(g.adj[u] & g.adj[v]))
        for a, b in combinations(common, 2):
            out.append(DoubleTriangle(a, u, v, b, _is_proper(g, a, u, v, b)))
    return out


def dte_sites(g: Graph, both_neighbours: bool = False) -> list[DteSite]:
    """Every (triangle, apex, pendant) choice.

    The two pendant choices at a fixed apex give isomorphic children, so by
    default only the smaller pendant is returned.
    """
    sites = []
    for tri in triangles(g):
        members = (1 << tri[0]) | (1 << tri[1]) | (1 << tri[2])
        for apex in tri:
            pendants = list(iter_bits(g.adj[apex] & ~members))
            if not both_neighbours:
                pendants = pendants[:1]
            for p in pendants:
                sites.append(DteSite(tri, apex, p))
    return sites


def _check_site(g: Graph, site: DteSite) -> None:
    a, b, c = site.triangle
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise InvalidSite(f"{site.triangle} is not a triangle")
    if site.apex not in site.triangle:
        raise InvalidSite(f"apex {site.apex} not in triangle {site.triangle}")
    if site.pendant in site.triangle or not g.has_edge(site.apex, site.pendant):
        raise InvalidSite(f"{site.pendant} is not a pendant neighbour of {site.apex}")


def dte(g: Graph, site: DteSite) -> Graph:
    """Expand: subdivide the edge opposite the apex and the pendant edge, then
    merge the two subdivision vertices into a new vertex with index ``n``."""
    _check_site(g, site)
    x, y = site.others()
    a, p = site.apex, site.pendant
    w = g.n
    rows = list(g.adj) + [(1 << x) | (1 << y) | (1 << a) | (1 << p)]
    rows[x] = rows[x] & ~(1 << y) | (1 << w)
    rows[y] = rows[y] & ~(1 << x) | (1 << w)
    rows[a] = rows[a] & ~(1 << p) | (1 << w)
    rows[p] = rows[p] & ~(1 << a) | (1 << w)
    return Graph(g.n + 1, tuple(rows))


def created_double_triangle(g: Graph, site: DteSite) -> DoubleTriangle:
    """The double triangle of ``dte(g, site)`` whose reduction recovers ``g``."""
    x, y = site.others()
    child = dte(g, site)
    v2, v3 = sorted((site.apex, g.n))
    v1, v4 = sorted((x, y))
    return DoubleTriangle(v1, v2, v3, v4, _is_proper(child, v1, v2, v3, v4))


def dtr(g: Graph, dt: DoubleTriangle) -> Graph:
    """Reduce: drop edges v1v3, v2v3, v4v3, merge v3 into v2, add edge v1v4.

    The merged vertex keeps index ``v2``; vertex ``v3`` is deleted and the
    labels above it shift down by one.
    """
    v1, v2, v3, v4 = dt.v1, dt.v2, dt.v3, dt.v4
    for a, b in ((v1, v2), (v1, v3), (v2, v3), (v2, v4), (v3, v4)):
        if not g.has_edge(a, b):
            raise ImproperDoubleTriangle(f"({v1},{v2},{v3},{v4}) is not a double triangle")
    if not _is_proper(g, v1, v2, v3, v4):
        raise ImproperDoubleTriangle(f"({v1},{v2},{v3},{v4}) lies in a triple triangle")
    if g.has_edge(v1, v4):
        raise WouldCreateMultiEdge(f"{v1} and {v4} are already adjacent")
    rows = list(g.adj)
    rest = rows[v3] & ~((1 << v1) | (1 << v2) | (1 << v4))
    if rows[v2] & rest:
        raise WouldCreateMultiEdge(f"merging {v3} into {v2} duplicates an edge")
    for u in (v1, v2, v4):
        rows[u] &= ~(1 << v3)
    rows[v3] = 0
    for u in iter_bits(rest):
        rows[u] = rows[u] & ~(1 << v3) | (1 << v2)
        rows[v2] |= 1 << u
    rows[v1] |= 1 << v4
    rows[v4] |= 1 << v1
    return delete_vertex(Graph(g.n, tuple(rows)), v3)


def reducible_double_triangles(g: Graph) -> list[DoubleTriangle]:
    return [dt for dt in find_double_triangles(g) if dt.proper and not g.has_edge(dt.v1, dt.v4)]


def decompletions(g: Graph) -> list[Graph]:
    """One vertex-deleted subgraph per isomorphism class, sorted by canonical form."""
    seen: dict[CanonicalForm, Graph] = {}
    for v in range(g.n):
        h = delete_vertex(g, v)
        seen.setdefault(canonical_form(h), h)
    return [seen[k] for k in sorted(seen)]


def completion(h: Graph) -> Graph:
    degs = h.degrees()
    low = [v for v, d in enumerate(degs) if d == 3]
    if len(low) != 4 or any(d not in (3, 4) for d in degs):
        raise BadDegreeSequence(f"need four degree-3 vertices and the rest degree 4, got {degs}")
    w = h.n
    rows = [row | (1 << w) if v in low else row for v, row in enumerate(h.adj)]
    rows.append(sum(1 << v for v in low))
    return Graph(h.n + 1, tuple(rows))


def _check_triangle(g: Graph, t: Sequence[int]) -> None:
    a, b, c = t
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise NotATriangle(f"{tuple(t)} is not a triangle")


def product(g1: Graph, t1: Sequence[int], g2: Graph, t2: Sequence[int]) -> Graph:
    """Glue ``t1[i]`` to ``t2[i]`` and delete the triangle edges.

    Labels of ``g1`` are kept; the non-triangle vertices of ``g2`` follow in
    increasing order.
    """
    _check_triangle(g1, t1)
    _check_triangle(g2, t2)
    index = {t2[i]: t1[i] for i in range(3)}
    nxt = g1.n
    for v in range(g2.n):
        if v not in index:
            index[v] = nxt
            nxt += 1
    tri1 = set(t1)
    edges = {(min(u, v), max(u, v)) for u, v in g1.edges() if not (u in tri1 and v in tri1)}
    tri2 = set(t2)
    for u, v in g2.edges():
        if u in tri2 and v in tri2:
            continue
        a, b = index[u], index[v]
        edges.add((min(a, b), max(a, b)))
    rows = [0] * nxt
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(nxt, tuple(rows))


def product_splits(g: Graph) -> list[tuple[Graph, Graph]]:
    """Split along every 3-vertex cut with exactly two sides.

    Each side keeps the cut vertices and gains the triangle on them.  Only cuts
    whose vertices are pairwise non-adjacent, send two edges into each side and
    leave at least two vertices on each side are used.
    """
    out = []
    for cut in vertex_three_cuts(g):
        blocked = sum(1 << v for v in cut)
        sides = components(g, blocked)
        if len(sides) != 2 or any(side.bit_count() < 2 for side in sides):
            continue
        if any(g.has_edge(a, b) for a, b in combinations(cut, 2)):
            continue
        if any((g.adj[v] & side).bit_count() != 2 for v in cut for side in sides):
            continue
        pair = []
        for side in sides:
            verts = list(cut) + list(iter_bits(side))
            h = induced_subgraph(g, verts)
            rows = list(h.adj)
            for i, j in ((0, 1), (0, 2), (1, 2)):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pair.append(Graph(h.n, tuple(rows)))
        out.append((pair[0], pair[1]))
    return out


def ancestor(
    g: Graph,
    rng: Optional[random.Random] = None,
    max_steps: int = 10_000,
) -> list[Graph]:
    """Reduce by proper DTRs, then product splits, until neither applies.

    With ``rng`` every step picks uniformly among all available reductions and
    splits; otherwise reductions are exhausted first.  Returns the terminal graphs sorted by
    canonical form.
    """
    pending = [g]
    done: list[Graph] = []
    steps = 0
    while pending:
        h = pending.pop()
        while True:
            steps += 1
            if steps > max_steps:
                raise NonTerminating(f"no fixed point after {max_steps} steps")
            dts = reducible_double_triangles(h)
            if rng is not None:
                moves = [("dtr", dt) for dt in dts] + [("split", s) for s in product_splits(h)]
                if not moves:
                    done.append(h)
                    break
                kind, move = rng.choice(moves)
                if kind == "dtr":
                    h = dtr(h, move)
                    continue
                pending.extend(move)
                break
            if dts:
                h = dtr(h, dts[0])
                continue
            splits = product_splits(h)
            if splits:
                pending.extend(splits[0])
                break
            done.append(h)
            break
    return sorted(done, key=canonical_form)


def ancestor_forms(g: Graph, rng: Optional[random.Random] = None) -> Counter:
    return Counter(canonical_form(h) for h in ancestor(g, rng))
