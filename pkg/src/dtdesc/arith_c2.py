"""Kirchhoff polynomial and the c2 invariant by point counting over F_p.

With a cycle basis C (rows = fundamental cycles, signed edge incidences) the
Kirchhoff polynomial is Psi(a) = det(C diag(a) C^T).  The fundamental cycle
matrix is totally unimodular, so every maximal minor is 0 or +-1 and the
Cauchy-Binet expansion is exactly the spanning-tree complement sum.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .errors import BudgetExceeded, Disconnected, NotPrime, TooFewVertices, TooManyEdges
from .graph import Graph, is_connected

MAX_MONOMIAL_EDGES = 24
POINT_BUDGET = 10**8
BATCH = 1 << 15


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def matrix_tree_count(g: Graph) -> int:
    """Spanning-tree count from a reduced Laplacian."""
    if g.n <= 1:
        return 1
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges():
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    return _bareiss_det([row[1:] for row in lap[1:]])


@dataclass(frozen=True)
class KirchhoffMonomials:
    """Each monomial is the set of edge indices outside one spanning tree."""

    edges: tuple[tuple[int, int], ...]
    monomials: tuple[frozenset[int], ...]

    def evaluate(self, assignment: Sequence[int], p: int) -> int:
        total = 0
        for mono in self.monomials:
            term = 1
            for e in mono:
                term = term * assignment[e] % p
            total += term
        return total % p


def spanning_tree_monomials(g: Graph) -> KirchhoffMonomials:
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    edges = tuple(g.edges())
    if len(edges) > MAX_MONOMIAL_EDGES:
        raise TooManyEdges(f"{len(edges)} edges exceed {MAX_MONOMIAL_EDGES}")
    need = g.n - 1
    out: list[frozenset[int]] = []

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    # include/exclude each edge; union-find rejects cycles
    def rec(i: int, parent: list[int], chosen: int, skipped: list[int]) -> None:
        if chosen == need:
            out.append(frozenset(skipped + list(range(i, len(edges)))))
            return
        if len(edges) - i < need - chosen:
            return
        u, v = edges[i]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            nxt = parent[:]
            nxt[ru] = rv
            rec(i + 1, nxt, chosen + 1, skipped)
        rec(i + 1, parent, chosen, skipped + [i])

    rec(0, list(range(g.n)), 0, [])
    count = matrix_tree_count(g)
    if len(out) != count:
        raise AssertionError(f"enumerated {len(out)} spanning trees, matrix-tree gives {count}")
    return KirchhoffMonomials(edges, tuple(out))


def cycle_basis(g: Graph) -> tuple[tuple[tuple[int, int], ...], np.ndarray]:
    """Edge list and the signed fundamental-cycle matrix of a DFS tree."""
    edges = tuple(g.edges())
    index = {e: i for i, e in enumerate(edges)}
    parent = [-1] * g.n
    depth = [-1] * g.n
    depth[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                parent[w] = u
                stack.append(w)
    tree = {(min(v, parent[v]), max(v, parent[v])) for v in range(g.n) if parent[v] >= 0}
    rows = []
    for u, v in edges:
        if (u, v) in tree:
            continue
        row = np.zeros(len(edges), dtype=np.int64)
        # edges are oriented low -> high; go u -> v, then v up to the common
        # ancestor and back down to u
        row[index[(u, v)]] = 1
        a, b = v, u
        while a != b:
            if depth[a] >= depth[b]:
                row[index[(min(a, parent[a]), max(a, parent[a]))]] += 1 if a < parent[a] else -1
                a = parent[a]
            else:
                row[index[(min(b, parent[b]), max(b, parent[b]))]] += 1 if parent[b] < b else -1
                b = parent[b]
        rows.append(row)
    mat = np.array(rows, dtype=np.int64).reshape(len(rows), len(edges))
    return edges, mat


def batched_det_mod(mats: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a stack of square integer matrices."""
    m = np.mod(mats, p).astype(np.int64)
    batch, size = m.shape[0], m.shape[1]
    det = np.ones(batch, dtype=np.int64)
    if size == 0:
        return det % p
    inv = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)
    rows = np.arange(batch)
    for k in range(size):
        col = m[:, k:, k]
        nz = col != 0
        has = nz.any(axis=1)
        piv = nz.argmax(axis=1) + k
        swap = has & (piv != k)
        if swap.any():
            idx = rows[swap]
            tmp = m[idx, k, :].copy()
            m[idx, k, :] = m[idx, piv[swap], :]
            m[idx, piv[swap], :] = tmp
            det[swap] = (p - det[swap]) % p
        pivot = m[:, k, k]
        det = det * pivot % p
        if k + 1 < size:
            factor = m[:, k + 1 :, k] * inv[pivot][:, None] % p
            m[:, k + 1 :, :] = (m[:, k + 1 :, :] - factor[:, :, None] * m[:, k, None, :]) % p
    return det


def dual_kirchhoff_eval(g: Graph, assignment: Mapping[tuple[int, int], int] | Sequence[int], p: int) -> int:
    """Psi at ``assignment`` mod p, given per edge (dict) or in ``g.edges()`` order."""
    _check_prime(p)
    edges, basis = cycle_basis(g)
    if isinstance(assignment, Mapping):
        values = [assignment[e] for e in edges]
    else:
        values = list(assignment)
    if len(values) != len(edges):
        raise ValueError(f"need {len(edges)} edge values, got {len(values)}")
    a = np.array(values, dtype=np.int64) % p
    gram = np.einsum("ie,e,je->ij", basis, a, basis)
    return int(batched_det_mod(gram[None], p)[0])


# float LU determinants are exact after rounding while |Psi| stays well below 2^52
FLOAT_EXACT_LIMIT = 2**40


def _psi_mod(a: np.ndarray, outer: np.ndarray, p: int, exact_float: bool) -> np.ndarray:
    """Psi mod p for each row of the batch ``a`` of edge values in [0, p)."""
    size = int(round(outer.shape[1] ** 0.5))
    gram = (a @ outer).reshape(-1, size, size)
    if exact_float:
        det = np.linalg.det(gram)
        rounded = np.rint(det)
        bad = np.abs(det - rounded) > 0.25
        out = rounded.astype(np.int64) % p
        if bad.any():
            out[bad] = batched_det_mod(gram[bad].astype(np.int64), p)
        return out
    return batched_det_mod(gram.astype(np.int64), p)


def _zeros_in_range(basis: np.ndarray, p: int, fixed: int, start: int, stop: int, exact_float: bool) -> int:
    """Zeros of Psi with the first ``fixed`` coordinates 0, the next one 1 and
    the remaining coordinates running over indices [start, stop)."""
    n_edges = basis.shape[1]
    free = n_edges - fixed - 1
    # row e of ``outer`` is the flattened c_e c_e^T, so a @ outer is the Gram matrix
    outer = np.einsum("ie,je->eij", basis, basis).reshape(n_edges, -1).astype(np.float64)
    total = 0
    powers = p ** np.arange(free, dtype=np.int64)
    for lo in range(start, stop, BATCH):
        hi = min(stop, lo + BATCH)
        idx = np.arange(lo, hi, dtype=np.int64)
        a = np.zeros((hi - lo, n_edges), dtype=np.float64)
        a[:, fixed] = 1
        if free:
            a[:, fixed + 1 :] = (idx[:, None] // powers[None, :]) % p
        total += int(np.count_nonzero(_psi_mod(a, outer, p, exact_float) == 0))
    return total


def _count_task(args: tuple[np.ndarray, int, int, int, int, bool]) -> int:
    return _zeros_in_range(*args)


def point_count(g: Graph, p: int, budget: int = POINT_BUDGET, workers: int = 1) -> int:
    """Number of points of F_p^E where Psi vanishes.

    Psi is homogeneous, so the count is 1 (the origin) plus p - 1 times the
    zeros whose first nonzero coordinate equals 1.
    """
    _check_prime(p)
    edges, basis = cycle_basis(g)
    n_edges = len(edges)
    if p**n_edges > budget:
        raise BudgetExceeded(f"{p}^{n_edges} points exceed the budget {budget}")
    if basis.shape[0] == 0:
        return 0  # Psi = 1 on a tree
    exact_float = matrix_tree_count(g) * (p - 1) ** basis.shape[0] < FLOAT_EXACT_LIMIT
    tasks = []
    for fixed in range(n_edges):
        size = p ** (n_edges - fixed - 1)
        step = max(BATCH, -(-size // max(1, 4 * workers)))
        for lo in range(0, size, step):
            tasks.append((basis, p, fixed, lo, min(size, lo + step), exact_float))
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            nonzero_first = sum(pool.map(_count_task, tasks))
    else:
        nonzero_first = sum(_count_task(t) for t in tasks)
    return 1 + (p - 1) * nonzero_first


@dataclass(frozen=True)
class C2Result:
    p: int
    point_count: int
    residue: int
    divisible: bool

    def is_minus_one(self) -> bool:
        return self.divisible and self.residue == self.p - 1


def c2(g: Graph, p: int, budget: int = POINT_BUDGET, workers: int = 1) -> C2Result:
    """c2 at p: the point count divided by p^2, reduced mod p."""
    if g.n < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {g.n}")
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    count = point_count(g, p, budget, workers)
    divisible = count % (p * p) == 0
    return C2Result(p, count, (count // (p * p)) % p, divisible)


def brute_point_count(g: Graph, p: int, monomials: Optional[KirchhoffMonomials] = None) -> int:
    """Reference count straight from the monomial sum; only for tiny inputs."""
    mono = monomials or spanning_tree_monomials(g)
    n_edges = len(mono.edges)
    if p**n_edges > 10**6:
        raise BudgetExceeded("reference count is limited to 10^6 points")
    count = 0
    for idx in range(p**n_edges):
        a = [(idx // p**j) % p for j in range(n_edges)]
        if mono.evaluate(a, p) == 0:
            count += 1
    return count


__all__ = [
    "C2Result",
    "KirchhoffMonomials",
    "batched_det_mod",
    "brute_point_count",
    "c2",
    "cycle_basis",
    "dual_kirchhoff_eval",
    "is_prime",
    "matrix_tree_count",
    "point_count",
    "spanning_tree_monomials",
]
