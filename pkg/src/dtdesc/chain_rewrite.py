"""Symbolic calculus on chain vectors.

A chain vector lists zigzag lengths.  Closed form: the cyclic sequence of one
closed chain.  Open form: each open chain followed by a 0.  Equivalent
vectors (chain order, chain direction, rotation/reflection of a closed chain,
repeated 0s) share one normal form.

Expansion rules, as token windows (a 0 token is a chain break; ``m``/``n``
match any single token, 0 included):

    (1,1,1)  [m+n+4]      -> [m, 3, n]
    (0,1,1)  [m+3, n]     -> [m, 3, n]
    (1,0,1)  [m, n+3]     -> [m, 3, n]
    (1,1,0)  [m+2, n+1]   -> [m, 2, 0, n]
    (0,1,0)  [m+2, 0, n]  -> [m, 2, 0, n]
    (1,0,0)  [m, 1, n+1]  -> [m, 2, 0, n]
    (0,0,c)  [l+1]        -> [l+2]

Reductions are the same windows read right to left.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .errors import BudgetExceeded, NegativeEntry, ZeroInClosed

Type = tuple[int, int, int]


@dataclass(frozen=True, order=True)
class ChainVector:
    entries: tuple[int, ...]
    closed: bool = False

    @property
    def total(self) -> int:
        return sum(self.entries)

    def chains(self) -> list[tuple[int, ...]]:
        if self.closed:
            return [self.entries]
        out, cur = [], []
        for x in self.entries:
            if x == 0:
                if cur:
                    out.append(tuple(cur))
                cur = []
            else:
                cur.append(x)
        if cur:
            out.append(tuple(cur))
        return out

    def __str__(self) -> str:
        body = ",".join(map(str, self.entries))
        return f"({body})" + ("*" if self.closed else "")

    def to_json(self) -> dict:
        return {"entries": list(self.entries), "closed": self.closed}


def parse(text: str) -> ChainVector:
    """Parse ``"3,3"`` (closed) or ``"2,0,1,0"`` (open; a 0 marks chain ends).

    A trailing ``*`` forces closed form and ``o`` forces open form.
    """
    text = text.strip()
    force = None
    if text.endswith("*"):
        force, text = True, text[:-1]
    elif text.endswith("o"):
        force, text = False, text[:-1]
    text = text.strip().strip("()[]")
    raw = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    closed = (0 not in raw) if force is None else force
    return normalize(raw, closed)


def _closed_key(entries: Sequence[int]) -> tuple[int, ...]:
    k = len(entries)
    best = None
    for seq in (tuple(entries), tuple(reversed(entries))):
        for r in range(k):
            rot = seq[r:] + seq[:r]
            if best is None or rot < best:
                best = rot
    return best


def _open_from_chains(chains: Iterable[Sequence[int]]) -> ChainVector:
    oriented = []
    for c in chains:
        c = tuple(c)
        if c:
            oriented.append(max(c, c[::-1]))
    oriented.sort(key=lambda c: (sum(c), c), reverse=True)
    entries: list[int] = []
    for c in oriented:
        entries.extend(c)
        entries.append(0)
    return ChainVector(tuple(entries) if entries else (0,), False)


def normalize(raw: Sequence[int], closed: bool) -> ChainVector:
    raw = list(raw)
    if any(x < 0 for x in raw):
        raise NegativeEntry(f"negative entry in {raw}")
    if closed:
        if 0 in raw:
            raise ZeroInClosed(f"closed chain vector {raw} contains 0")
        if not raw:
            raise ValueError("closed chain vector must be non-empty")
        return ChainVector(_closed_key(raw), True)
    chains, cur = [], []
    for x in raw:
        if x == 0:
            chains.append(cur)
            cur = []
        else:
            cur.append(x)
    chains.append(cur)
    return _open_from_chains(chains)


@lru_cache(maxsize=1 << 18)
def _from_cycle(tokens: tuple[int, ...]) -> ChainVector:
    """Normal form of a cyclic token sequence: closed if it has no 0."""
    if 0 not in tokens:
        return normalize(tokens, closed=True)
    cut = tokens.index(0)
    seq = list(tokens[cut + 1 :]) + list(tokens[: cut + 1])
    return normalize(seq, closed=False)


# --- rewrite rules -----------------------------------------------------------

Rewriter = Callable[[tuple[int, ...]], list[tuple[int, ...]]]


def _expand_111(w):
    (x,) = w
    return [(m, 3, x - 4 - m) for m in range(x - 3)] if x >= 4 else []


def _expand_011(w):
    x, n = w
    return [(x - 3, 3, n)] if x >= 3 else []


def _expand_101(w):
    m, y = w
    return [(m, 3, y - 3)] if y >= 3 else []


def _expand_110(w):
    x, y = w
    return [(x - 2, 2, 0, y - 1)] if x >= 2 and y >= 1 else []


def _expand_010(w):
    x, z, n = w
    return [(x - 2, 2, 0, n)] if x >= 2 and z == 0 else []


def _expand_100(w):
    m, one, y = w
    return [(m, 2, 0, y - 1)] if one == 1 and y >= 1 else []


def _expand_00c(w):
    (x,) = w
    return [(x + 1,)] if x >= 1 else []


def _reduce_111(w):
    m, three, n = w
    return [(m + n + 4,)] if three == 3 else []


def _reduce_011(w):
    m, three, n = w
    return [(m + 3, n)] if three == 3 else []


def _reduce_101(w):
    m, three, n = w
    return [(m, n + 3)] if three == 3 else []


def _reduce_110(w):
    m, two, z, n = w
    return [(m + 2, n + 1)] if two == 2 and z == 0 else []


def _reduce_010(w):
    m, two, z, n = w
    return [(m + 2, 0, n)] if two == 2 and z == 0 else []


def _reduce_100(w):
    m, two, z, n = w
    return [(m, 1, n + 1)] if two == 2 and z == 0 else []


def _reduce_00c(w):
    (x,) = w
    return [(x - 1,)] if x >= 2 else []


# (type, window length on the parent side, expand, window length on the child side, reduce)
RULES: list[tuple[Type, int, Rewriter, int, Rewriter]] = [
    ((1, 1, 1), 1, _expand_111, 3, _reduce_111),
    ((0, 1, 1), 2, _expand_011, 3, _reduce_011),
    ((1, 0, 1), 2, _expand_101, 3, _reduce_101),
    ((1, 1, 0), 2, _expand_110, 4, _reduce_110),
    ((0, 1, 0), 3, _expand_010, 4, _reduce_010),
    ((1, 0, 0), 3, _expand_100, 4, _reduce_100),
    ((0, 0, 0), 1, _expand_00c, 1, _reduce_00c),
    ((0, 0, 1), 1, _expand_00c, 1, _reduce_00c),
]


def _cycle_reps(cv: ChainVector) -> set[tuple[tuple[int, ...], int]]:
    """Cyclic token sequences standing for ``cv``.

    Closed: every rotation and reflection.  Open: up to two chains placed in
    front, in either direction, with the surrounding chain breaks written as
    one, two or three 0s (the leading run may also be empty); remaining
    chains follow in fixed order.  Each sequence comes with the length of its
    focus prefix: a window lying inside the tail also occurs, with the same
    remainder up to chain order, when its chains are in focus.
    """
    if cv.closed:
        e = cv.entries
        out = set()
        for seq in (e, e[::-1]):
            for r in range(len(seq)):
                out.add((seq[r:] + seq[:r], len(seq)))
        return out
    chains = cv.chains()
    out = set()
    runs = ((0,), (0, 0), (0, 0, 0))
    # the leading run is cyclically adjacent to the last one, so it may be empty
    lead_runs = ((),) + runs
    if not chains:
        return {((0,), 1), ((0, 0), 2), ((0, 0, 0), 3)}
    for focus_len in (1, 2):
        if focus_len > len(chains):
            continue
        for picked in permutations(range(len(chains)), focus_len):
            rest = [chains[i] for i in range(len(chains)) if i not in picked]
            tail: tuple[int, ...] = ()
            for c in rest:
                tail += c + (0,)
            for dirs in product((False, True), repeat=focus_len):
                focus = [chains[i][::-1] if d else chains[i] for i, d in zip(picked, dirs)]
                for lead, rr in product(lead_runs, product(runs, repeat=focus_len)):
                    seq: tuple[int, ...] = lead
                    for c, run in zip(focus, rr):
                        seq += c + run
                    out.add((seq + tail, len(seq)))
    return out


def _apply(cv: ChainVector, width_index: int, fn_index: int) -> set[tuple[Type, ChainVector]]:
    results: set[tuple[Type, ChainVector]] = set()
    seen: set[tuple[Type, tuple[int, ...]]] = set()
    reps = _cycle_reps(cv)
    for rule in RULES:
        typ, width, fn = rule[0], rule[width_index], rule[fn_index]
        for seq, focus in reps:
            L = len(seq)
            if width > L:
                continue
            doubled = seq + seq
            starts = range(L) if focus >= L - width + 1 else [*range(focus), *range(L - width + 1, L)]
            for i in starts:
                window = doubled[i : i + width]
                rest = doubled[i + width : i + L]
                for repl in fn(window):
                    tokens = tuple(repl) + rest
                    if (typ, tokens) not in seen:
                        seen.add((typ, tokens))
                        results.add((typ, _from_cycle(tokens)))
    return results


def dte_children(cv: ChainVector) -> frozenset[tuple[Type, ChainVector]]:
    """All (type, child) pairs reachable from ``cv`` by one expansion."""
    return _dte_children(cv)


@lru_cache(maxsize=1 << 16)
def _dte_children(cv: ChainVector) -> frozenset[tuple[Type, ChainVector]]:
    out = _apply(cv, 1, 2)
    if cv.closed and len(cv.entries) == 1:
        # a single cyclic zigzag has no ends: the pieces either side of the
        # new 3-zigzag rejoin into one zigzag
        (x,) = cv.entries
        out = {(t, c) for t, c in out if t != (1, 1, 1)}
        if x >= 5:
            out.add(((1, 1, 1), normalize([x - 4, 3], closed=True)))
        elif x == 4:
            out.add(((1, 1, 1), normalize([3, 0], closed=False)))
    return frozenset(out)


def dtr_parents(cv: ChainVector) -> frozenset[tuple[Type, ChainVector]]:
    """All (type, parent) pairs such that ``cv`` is a child of the parent."""
    return _dtr_parents(cv)


@lru_cache(maxsize=1 << 16)
def _dtr_parents(cv: ChainVector) -> frozenset[tuple[Type, ChainVector]]:
    out = _apply(cv, 3, 4)
    # mirror of the special case in dte_children: a single cyclic zigzag is
    # only reached back from a closed (x - 4, 3)
    out = {(t, p) for t, p in out if not (t == (1, 1, 1) and p.closed and len(p.entries) == 1)}
    if cv.closed and len(cv.entries) == 2 and 3 in cv.entries:
        other = cv.entries[1] if cv.entries[0] == 3 else cv.entries[0]
        out.add(((1, 1, 1), normalize([other + 4], closed=True)))
    if cv == ChainVector((3, 0), False):
        out.add(((1, 1, 1), ChainVector((4,), True)))
    return frozenset(out)


# --- outcomes and closure ----------------------------------------------------


class CvOutcome(str, Enum):
    CANDIDATE = "Candidate"
    UNREALIZABLE_LEMMA = "UnrealizableLemma"
    INVALID = "Invalid"
    CLOSED_SINGLE = "ClosedSingle"


def lemma_shape(cv: ChainVector) -> bool:
    """A single chain reading (m,1), (m,1,1) or (m,2) with m >= 2, open or closed."""
    chains = cv.chains()
    if len(chains) != 1:
        return False
    e = sorted(chains[0])
    if len(e) == 2:
        return e[0] in (1, 2) and e[1] >= 2
    if len(e) == 3:
        return e[0] == 1 and e[1] == 1 and e[2] >= 2
    return False


def is_unrealizable(cv: ChainVector) -> bool:
    """Closed (m,1), (m,1,1) or (m,2) with m >= 2, up to rotation/reflection.

    Open vectors are not excluded: (2,1,0) is itself one of the starting
    vectors of the minimum-triangle argument.
    """
    return cv.closed and lemma_shape(cv)


def classify_outcome(cv: ChainVector) -> CvOutcome:
    if not any(x >= 2 for x in cv.entries):
        return CvOutcome.INVALID
    if is_unrealizable(cv):
        return CvOutcome.UNREALIZABLE_LEMMA
    if cv.closed and len(cv.entries) == 1:
        return CvOutcome.CLOSED_SINGLE
    return CvOutcome.CANDIDATE


TARGET = ChainVector((3, 3), True)


@dataclass
class ClosureResult:
    start: ChainVector
    closure: list[ChainVector]
    edges: list[tuple[ChainVector, Type, ChainVector]]
    outcomes: dict[ChainVector, CvOutcome]
    reached_target: bool
    saturated: bool
    max_sum: int
    largest_sum: int = 0

    def certificate(self) -> dict:
        return {
            "start": str(self.start),
            "rules_applied": [
                {"child": str(c), "type": list(t), "parent": str(p)} for c, t, p in self.edges
            ],
            "closure": [str(v) for v in self.closure],
            "outcomes": {str(v): o.value for v, o in sorted(self.outcomes.items())},
            "reached_target": self.reached_target,
            "saturated": self.saturated,
            "max_sum": self.max_sum,
            "largest_sum": self.largest_sum,
        }


def dtr_closure(start: ChainVector, max_sum: int = 12, target: ChainVector = TARGET) -> ClosureResult:
    """Breadth-first search over reductions from ``start``.

    Unrealizable, invalid and single closed-chain vectors are dead ends; a
    revisited vector closes its branch.  Raises :class:`BudgetExceeded` if a
    vector with entry sum above ``max_sum`` is generated.
    """
    seen = {start}
    order = [start]
    edges = []
    outcomes = {}
    queue = deque([start])
    reached = False
    largest = start.total
    while queue:
        cv = queue.popleft()
        outcome = classify_outcome(cv)
        outcomes[cv] = outcome
        if cv == target:
            reached = True
            continue
        if outcome is not CvOutcome.CANDIDATE:
            continue
        for typ, parent in sorted(dtr_parents(cv)):
            edges.append((cv, typ, parent))
            if parent.total > max_sum:
                raise BudgetExceeded(f"closure from {start} reached {parent} above max_sum={max_sum}")
            largest = max(largest, parent.total)
            if parent not in seen:
                seen.add(parent)
                order.append(parent)
                queue.append(parent)
    return ClosureResult(start, order, edges, outcomes, reached, True, max_sum, largest)


MIN_TRI_STARTS = ("2,0", "2,1,0", "2,0,1,0", "3,0")


@dataclass
class MinTriangleReport:
    closures: list[ClosureResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.saturated and not c.reached_target for c in self.closures)

    def to_json(self) -> str:
        return json.dumps(
            {"passed": self.passed, "closures": [c.certificate() for c in self.closures]}, indent=2
        )


def verify_min_triangle_theorem(max_sum: int = 12) -> MinTriangleReport:
    report = MinTriangleReport()
    for text in MIN_TRI_STARTS:
        report.closures.append(dtr_closure(parse(text), max_sum))
    return report
