"""Header-less graph6 encoding (nauty's format for small undirected graphs)."""

from __future__ import annotations

from .errors import MalformedGraph6
from .graph import Graph


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> bytes:
    """Upper triangle, column by column, packed six bits per byte plus 63."""
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        body.append(val + 63)
    return _encode_size(g.n) + bytes(body)


def from_graph6(s: bytes | str) -> Graph:
    if isinstance(s, str):
        s = s.encode("ascii")
    s = s.strip()
    if s.startswith(b">>graph6<<"):
        s = s[len(b">>graph6<<") :]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if any(c < 63 or c > 126 for c in s):
        raise MalformedGraph6("graph6 bytes must lie in [63, 126]")
    if s[0] != 126:
        n, body = s[0] - 63, s[1:]
    else:
        if len(s) < 4 or s[1] == 126:
            raise MalformedGraph6("unsupported or truncated size header")
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63)
        body = s[4:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    if n > 64:
        raise MalformedGraph6(f"{n} vertices exceeds the 64-vertex limit")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))
