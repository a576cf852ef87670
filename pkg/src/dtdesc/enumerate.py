"""Layered generation of the K5 family with canonical deduplication."""

from __future__ import annotations

import logging
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .canonical import CanonicalForm, canonical_form, canonical_graph
from .dt_ops import dte, dte_sites
from .graph import Graph, complete_graph, triangle_count
from .graph6 import from_graph6, to_graph6
from .report import Report

log = logging.getLogger(__name__)

MIN_N = 5
MAX_N = 16


@dataclass(frozen=True)
class DescendantRecord:
    form: CanonicalForm
    graph: Graph
    n: int
    tri: int
    chain_vector: Optional[object] = None
    one_zigzag: bool = False

    @property
    def level(self) -> int:
        return self.n - self.tri

    @property
    def graph6(self) -> str:
        return self.form.graph6()


@dataclass
class DescendantDatabase:
    layers: dict[int, dict[CanonicalForm, DescendantRecord]] = field(default_factory=dict)
    created: float = field(default_factory=time.time)
    seconds: dict[int, float] = field(default_factory=dict)

    @property
    def max_n(self) -> int:
        return max(self.layers)

    def layer(self, n: int) -> list[DescendantRecord]:
        return [self.layers[n][k] for k in sorted(self.layers[n])]

    def records(self) -> Iterable[DescendantRecord]:
        for n in sorted(self.layers):
            yield from self.layer(n)

    def layer_sizes(self) -> list[int]:
        return [len(self.layers[n]) for n in sorted(self.layers)]


def make_record(g: Graph, form: Optional[CanonicalForm] = None) -> DescendantRecord:
    from .zigzag import chain_vector_or_none, is_one_zigzag

    if form is None:
        form = canonical_form(g)
    cg = canonical_graph(g) if form.bytes != to_graph6(g) else g
    cv = chain_vector_or_none(cg) if cg.n >= 7 else None
    return DescendantRecord(form, cg, cg.n, triangle_count(cg), cv, is_one_zigzag(cg))


def _expand(g6s: list[bytes]) -> list[bytes]:
    out = set()
    for s in g6s:
        g = from_graph6(s)
        for site in dte_sites(g):
            out.add(canonical_form(dte(g, site)).bytes)
    return sorted(out)


def next_layer(parents: list[Graph], workers: int = 1) -> list[bytes]:
    """Canonical graph6 strings of all DTE children of ``parents``."""
    g6s = [to_graph6(p) for p in parents]
    if workers <= 1 or len(g6s) < 2 * workers:
        return _expand(g6s)
    chunks = [g6s[i::workers] for i in range(workers)]
    merged: set[bytes] = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_expand, chunks):
            merged.update(part)
    return sorted(merged)


def descendants_up_to(max_n: int, workers: int = 1, cache_dir: Optional[Path] = None) -> DescendantDatabase:
    """All descendants of K5 with at most ``max_n`` vertices, layer by layer."""
    if not MIN_N <= max_n <= MAX_N:
        raise ValueError(f"max_n must lie in [{MIN_N}, {MAX_N}]")
    db = DescendantDatabase()
    k5 = canonical_graph(complete_graph(5))
    db.layers[5] = {canonical_form(k5): make_record(k5)}
    for n in range(MIN_N + 1, max_n + 1):
        start = time.perf_counter()
        layer = load_layer(cache_dir, n) if cache_dir else None
        if layer is None:
            parents = [r.graph for r in db.layer(n - 1)]
            layer = next_layer(parents, workers)
            if cache_dir:
                save_layer(cache_dir, n, layer)
        records = {}
        for s in layer:
            g = from_graph6(s)
            form = CanonicalForm(g.n, s)
            records[form] = make_record(g, form)
        db.layers[n] = records
        db.seconds[n] = time.perf_counter() - start
        log.info("n=%d: %d descendants (%.1fs)", n, len(records), db.seconds[n])
    return db


def layer_path(cache_dir: Path, n: int) -> Path:
    return Path(cache_dir) / f"descendants_n{n}.g6"


def save_layer(cache_dir: Path, n: int, layer: list[bytes]) -> Path:
    path = layer_path(cache_dir, n)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(b"".join(s + b"\n" for s in sorted(layer)))
    return path


def load_layer(cache_dir: Path, n: int) -> Optional[list[bytes]]:
    path = layer_path(cache_dir, n)
    if not path.exists():
        return None
    lines = [line for line in path.read_bytes().splitlines() if line]
    if lines != sorted(set(lines)):
        log.warning("ignoring unsorted or duplicated layer file %s", path)
        return None
    for s in lines:
        if canonical_form(from_graph6(s)).bytes != s:
            log.warning("ignoring layer file %s with non-canonical entry %r", path, s)
            return None
    return lines


def default_cache_dir() -> Optional[Path]:
    env = os.environ.get("DTDESC_DATA_DIR")
    return Path(env) if env else None


def count_table(db: DescendantDatabase) -> dict[tuple[int, int], int]:
    counts: Counter = Counter()
    for rec in db.records():
        counts[(rec.n, rec.tri)] += 1
    return dict(counts)


# --- verification suites -----------------------------------------------------


def write_count_csv(db: DescendantDatabase, path: Path) -> Path:
    """``n,t,count`` rows for every nonzero cell, sorted."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = ["n,t,count"] + [f"{n},{t},{c}" for (n, t), c in sorted(count_table(db).items())]
    path.write_text("\n".join(rows) + "\n")
    return path


def verify_table(db: DescendantDatabase) -> Report:
    from .reference import PUBLISHED_COUNTS, PUBLISHED_T_RANGE

    report = Report("count table")
    counts = count_table(db)
    diffs = []
    for (n, t), expected in sorted(PUBLISHED_COUNTS.items()):
        if n > db.max_n:
            continue
        got = counts.get((n, t), 0)
        if got != expected:
            diffs.append({"n": n, "t": t, "expected": expected, "got": got})
    outside = sorted(k for k in counts if k[1] not in PUBLISHED_T_RANGE)
    report.add("table cells match", not diffs, mismatches=diffs, max_n=db.max_n)
    report.add("no counts outside 4 <= t <= 14", not outside, cells=outside)
    return report


def min_triangles(db: DescendantDatabase) -> tuple[int, list[DescendantRecord]]:
    best = min(rec.tri for rec in db.records())
    return best, [rec for rec in db.records() if rec.tri == best]


def verify_min_triangles(db: DescendantDatabase, max_sum: int = 12) -> Report:
    from .chain_rewrite import verify_min_triangle_theorem

    report = Report("minimum triangle count")
    best, witnesses = min_triangles(db)
    first_n = min(w.n for w in witnesses)
    first = [w.graph6 for w in witnesses if w.n == first_n]
    report.add("minimum is 4", best == 4, minimum=best)
    report.add("first attained at n=10 by one graph", first_n == 10 and len(first) == 1, n=first_n, witnesses=first)
    theorem = verify_min_triangle_theorem(max_sum)
    report.add(
        "(3,3) unreachable by reductions from the small-vector starts",
        theorem.passed,
        closures=[c.certificate() for c in theorem.closures],
    )
    return report


def verify_level_props(db: DescendantDatabase) -> Report:
    from .zigzag import zigzag_decomposition

    report = Report("level propositions")
    bad0, bad1, bad2, badf = [], [], [], []
    for n in sorted(db.layers):
        layer = db.layer(n)
        zero = [r for r in layer if r.level == 0]
        if n >= 7 and (len(zero) != 1 or not zero[0].one_zigzag):
            bad0.append({"n": n, "level0": [r.graph6 for r in zero]})
        bad1.extend({"n": n, "graph6": r.graph6} for r in layer if r.level == 1)
        for r in layer:
            if r.n <= 6 or r.level <= 0:
                continue
            if r.level == 2:
                cv = r.chain_vector
                dec = zigzag_decomposition(r.graph)
                if cv is None or not cv.closed or len(cv.entries) != 2 or dec.m:
                    bad2.append(r.graph6)
            formula = zigzag_decomposition(r.graph).level_formula()
            if formula != r.level:
                badf.append({"graph6": r.graph6, "level": r.level, "formula": formula})
    level2 = {n: sum(1 for r in db.layer(n) if r.level == 2) for n in sorted(db.layers) if n >= 8}
    report.add("one level-0 descendant per order >= 7, a 1-zigzag", not bad0, failures=bad0)
    report.add("no level-1 descendants", not bad1, witnesses=bad1)
    report.add("level-2 descendants are 2-zigzags", not bad2, witnesses=bad2, counts=level2)
    report.add("level = 2k - l + m for level > 0, order > 6", not badf, failures=badf)
    return report


def _forms_reaching(db: DescendantDatabase, target: CanonicalForm, upto: int) -> dict[int, set[CanonicalForm]]:
    """Per order, the forms with a DTR path down to ``target``."""
    from .dt_ops import dtr, reducible_double_triangles

    reach = {target.n: {target}}
    for n in range(target.n + 1, upto + 1):
        below = reach[n - 1]
        here = set()
        for rec in db.layer(n):
            for dt in reducible_double_triangles(rec.graph):
                if canonical_form(dtr(rec.graph, dt)) in below:
                    here.add(rec.form)
                    break
        reach[n] = here
    return reach


def cross_validate_rewrite(db: DescendantDatabase, lo: int = 8, hi: int = 12) -> Report:
    """Graph-level DTR chain-vector transitions against the rewrite rules."""
    from .chain_rewrite import TARGET, dtr_parents
    from .dt_ops import dtr, find_double_triangles
    from .zigzag import chain_vector

    report = Report("rewrite rules against graphs")
    hi = min(hi, db.max_n)
    checked, mismatches = 0, []
    for n in range(lo, hi + 1):
        for rec in db.layer(n):
            parents = {p for _, p in dtr_parents(rec.chain_vector)}
            for dt in find_double_triangles(rec.graph):
                if not dt.proper:
                    continue
                checked += 1
                got = chain_vector(dtr(rec.graph, dt))
                if got not in parents:
                    mismatches.append(
                        {"graph6": rec.graph6, "child": str(rec.chain_vector), "double_triangle": dt, "parent": str(got)}
                    )
    report.add("DTR transitions follow the rules", not mismatches, checked=checked, mismatches=mismatches)

    target = [r for r in db.layer(8) if r.chain_vector == TARGET] if 8 in db.layers else []
    if target:
        reach = _forms_reaching(db, target[0].form, db.max_n)
        stuck = [r.graph6 for n in range(9, db.max_n + 1) for r in db.layer(n) if not r.one_zigzag and r.form not in reach[n]]
        report.add("non-1-zigzags of order >= 9 reduce to (3,3)", not stuck, witnesses=stuck)
    return report


def dte_type_agreement(db: DescendantDatabase, lo: int = 7, hi: int = 12) -> Report:
    """How often the site type of an expansion selects the observed rule row.

    Informational: the child vector is always among the predicted children,
    but the type computed from the local definition does not always pick the
    row that produced it.
    """
    from .chain_rewrite import dte_children
    from .errors import SwapConventionUnsatisfiable
    from .zigzag import chain_vector, classify_dte_site

    counts = Counter()
    examples: dict[str, list] = {}
    for n in range(lo, min(hi, db.max_n) + 1):
        for rec in db.layer(n):
            children = dte_children(rec.chain_vector)
            kids = {c for _, c in children}
            for site in dte_sites(rec.graph, both_neighbours=True):
                got = chain_vector(dte(rec.graph, site))
                try:
                    typ = tuple(classify_dte_site(rec.graph, site))
                except SwapConventionUnsatisfiable:
                    typ = None
                if typ is not None and (typ, got) in children:
                    key = "type_selects_child"
                elif got in kids:
                    key = "child_predicted_other_type" if typ else "child_predicted_no_type"
                else:
                    key = "child_not_predicted"
                counts[key] += 1
                if key != "type_selects_child" and len(examples.setdefault(key, [])) < 5:
                    examples[key].append(
                        {"graph6": rec.graph6, "cv": str(rec.chain_vector), "site": site, "type": typ, "child": str(got)}
                    )
    report = Report("expansion types")
    report.add("every expansion child is predicted", counts["child_not_predicted"] == 0, counts=dict(counts), examples=examples)
    return report


def verify_structure(db: DescendantDatabase) -> Report:
    from .chain_rewrite import lemma_shape
    from .graph import contains_k4, contains_triple_triangle, is_four_regular, is_internally_six_edge_connected

    report = Report("structural exclusions")
    k4, k311, cut, reg, cv_bad, no_cv = [], [], [], [], [], []
    for rec in db.records():
        g = rec.graph
        if not is_four_regular(g):
            reg.append(rec.graph6)
        if rec.n > 5 and contains_k4(g):
            k4.append(rec.graph6)
        if rec.n > 5 and contains_triple_triangle(g):
            k311.append(rec.graph6)
        res = is_internally_six_edge_connected(g)
        if not res.passed:
            cut.append({"graph6": rec.graph6, "witness": res.witness, "cut_size": res.cut_size})
        if rec.n >= 7:
            if rec.chain_vector is None:
                no_cv.append(rec.graph6)
            elif lemma_shape(rec.chain_vector):
                cv_bad.append({"graph6": rec.graph6, "cv": str(rec.chain_vector)})
    report.add("all 4-regular", not reg, witnesses=reg)
    report.add("no K4 above order 5", not k4, witnesses=k4)
    report.add("no K_{3,1,1} above order 5", not k311, witnesses=k311)
    report.add("internally 6-edge-connected", not cut, witnesses=cut)
    report.add("every order >= 7 descendant has a chain vector", not no_cv, witnesses=no_cv)
    report.add("no chain vector (m,1), (m,1,1), (m,2), open or closed", not cv_bad, witnesses=cv_bad)
    return report


def verify_ancestors(db: DescendantDatabase, samples: int = 50, seed: int = 0, max_n: int = 12) -> Report:
    import random

    from .dt_ops import ancestor_forms, product
    from .graph import complete_graph

    report = Report("ancestors")
    rng = random.Random(seed)
    pool = [r for r in db.records() if r.n <= max_n]
    picks = [pool[rng.randrange(len(pool))] for _ in range(samples)]
    k5 = canonical_form(complete_graph(5))
    wrong, disagree = [], []
    for rec in picks:
        a = ancestor_forms(rec.graph)
        b = ancestor_forms(rec.graph, random.Random(rng.randrange(2**32)))
        if a != Counter({k5: 1}):
            wrong.append(rec.graph6)
        if a != b:
            disagree.append(rec.graph6)
    report.add("ancestor is K5", not wrong, samples=len(picks), seed=seed, witnesses=wrong)
    report.add("two reduction orders agree", not disagree, witnesses=disagree)
    k5g = complete_graph(5)
    prod = product(k5g, (0, 1, 2), k5g, (0, 1, 2))
    forms = ancestor_forms(prod)
    report.add("ancestor of K5 x K5 is {K5, K5}", forms == Counter({k5: 2}), order=prod.n)
    return report
