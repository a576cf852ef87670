"""Canonical labeling by colour refinement plus individualisation search.

The seed colour of a vertex is (degree, number of triangles through it,
sorted multiset of BFS distances).  The refined partition is searched by
individualising vertices of the first smallest non-singleton cell; at every
level only the children whose refined partition has the least signature are
expanded, and among the discrete leaves the lexicographically least relabelled
adjacency wins.  Two leaves with equal certificates give an automorphism, and
children in one orbit of the automorphisms fixing the current prefix are
expanded only once.  All choices depend only on colours, so the result is
labeling independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits, relabel
from .graph6 import to_graph6


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bytes: bytes

    def graph6(self) -> str:
        return self.bytes.decode("ascii")


def _seed_colours(g: Graph, nbrs: list[list[int]]) -> list[tuple]:
    adj = g.adj
    seeds = []
    for v in range(g.n):
        tri = 0
        for w in nbrs[v]:
            tri += (adj[v] & adj[w]).bit_count()
        dists = []
        seen = 1 << v
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= adj[u]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
            if nxt:
                dists.append((d, nxt.bit_count()))
        seeds.append((len(nbrs[v]), tri // 2, tuple(dists), g.n - seen.bit_count()))
    return seeds


def _rank(keys: list) -> tuple[list[int], int]:
    uniq = sorted(set(keys))
    index = {k: i for i, k in enumerate(uniq)}
    return [index[k] for k in keys], len(uniq)


def _refine(nbrs: list[list[int]], colours: list[int], ncells: int) -> tuple[list[int], int, tuple]:
    n = len(colours)
    while True:
        sigs = [(colours[v], tuple(sorted([colours[w] for w in nbrs[v]]))) for v in range(n)]
        uniq = sorted(set(sigs))
        if len(uniq) == ncells:
            return colours, ncells, tuple(uniq)
        index = {s: i for i, s in enumerate(uniq)}
        colours = [index[s] for s in sigs]
        ncells = len(uniq)


def _target_cell(colours: list[int]) -> list[int]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best or []


def _leaf_certificate(nbrs: list[list[int]], colours: list[int]) -> tuple[int, ...]:
    rows = [0] * len(colours)
    for v, c in enumerate(colours):
        row = 0
        for w in nbrs[v]:
            row |= 1 << colours[w]
        rows[c] = row
    return tuple(rows)


def _orbit_roots(n: int, autos: list[list[int]], prefix: list[int]) -> list[int]:
    """Union-find roots of the orbits of the automorphisms fixing ``prefix``."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in autos:
        if all(gamma[v] == v for v in prefix):
            for v in range(n):
                a, b = find(v), find(gamma[v])
                if a != b:
                    parent[a] = b
    return [find(v) for v in range(n)]


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` with ``relabel(g, perm)`` the canonical representative."""
    n = g.n
    if n == 0:
        return []
    nbrs = [g.neighbors(v) for v in range(n)]
    colours, ncells = _rank(_seed_colours(g, nbrs))
    colours, ncells, _ = _refine(nbrs, colours, ncells)

    best: dict = {"cert": None, "perm": None}
    # automorphisms found from equal leaves; subtrees they map onto each other
    # carry the same certificates and are skipped
    autos: list[list[int]] = []

    def search(colours: list[int], ncells: int, prefix: list[int]) -> None:
        if ncells == n:
            cert = _leaf_certificate(nbrs, colours)
            if best["cert"] is None or cert < best["cert"]:
                best["cert"], best["perm"] = cert, colours
            elif cert == best["cert"]:
                inv = [0] * n
                for v, c in enumerate(best["perm"]):
                    inv[c] = v
                autos.append([inv[colours[v]] for v in range(n)])
            return
        cell = _target_cell(colours)
        children = []
        for v in cell:
            split = [2 * c + (1 if (c == colours[v] and u != v) else 0) for u, c in enumerate(colours)]
            ranked, k = _rank(split)
            children.append((v, _refine(nbrs, ranked, k)))
        least = min(inv for _, (_, _, inv) in children)
        done: list[int] = []
        for v, (col, k, inv) in children:
            if inv != least:
                continue
            if done:
                roots = _orbit_roots(n, autos, prefix)
                if any(roots[v] == roots[u] for u in done):
                    continue
            done.append(v)
            search(col, k, prefix + [v])

    search(colours, ncells, [])
    return list(best["perm"])


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.n, to_graph6(canonical_graph(g)))
