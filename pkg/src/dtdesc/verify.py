"""The acceptance suites, one report per criterion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .arith_c2 import POINT_BUDGET, c2
from .dt_ops import decompletions
from .enumerate import (
    DescendantDatabase,
    count_table,
    cross_validate_rewrite,
    verify_ancestors,
    verify_level_props,
    verify_min_triangles,
    verify_structure,
    verify_table,
)
from .genfunc import (
    asymptotic_ratio,
    gf_equal,
    level3_alternative_forms,
    level3_from_templates,
    level_gf,
    series,
)
from .graph import complete_graph
from .report import Report

GF_LEVELS = (0, 2, 3, 4)
ASYMPTOTIC_N = 1000
ASYMPTOTIC_TOL = 0.01


@dataclass(frozen=True)
class SuiteConfig:
    primes: tuple[int, ...] = (2, 3)
    c2_max_n: int = 9
    point_budget: int = POINT_BUDGET
    workers: int = 1
    seed: int = 0
    max_sum: int = 12
    samples: int = 50


def criterion_table(db: DescendantDatabase, cfg: SuiteConfig) -> Report:
    return verify_table(db)


def criterion_min_triangles(db: DescendantDatabase, cfg: SuiteConfig) -> Report:
    return verify_min_triangles(db, cfg.max_sum)


def criterion_levels(db: DescendantDatabase, cfg: SuiteConfig) -> Report:
    return verify_level_props(db)


def criterion_genfunc(db: DescendantDatabase, cfg: SuiteConfig) -> Report:
    report = Report("generating functions")
    counts = count_table(db)
    for level in GF_LEVELS:
        coeffs = series(level_gf(level), db.max_n)
        diffs = [
            {"n": n, "series": coeffs[n], "enumerated": counts.get((n, n - level), 0)}
            for n in range(5, db.max_n + 1)
            if coeffs[n] != counts.get((n, n - level), 0)
        ]
        report.add(f"level {level} series matches enumeration", not diffs, mismatches=diffs)
    report.add(
        "level-3 closed forms agree",
        all(gf_equal(f, level_gf(3)) for f in level3_alternative_forms()),
    )
    report.add("level-3 templates sum to the closed form", gf_equal(level3_from_templates(), level_gf(3)))
    for level in (2, 3, 4):
        ratio = asymptotic_ratio(level, ASYMPTOTIC_N)
        report.add(
            f"level {level} asymptotic ratio within 1% at n={ASYMPTOTIC_N}",
            abs(ratio - 1) <= ASYMPTOTIC_TOL,
            ratio=float(ratio),
        )
    return report


def criterion_c2(db: DescendantDatabase, cfg: SuiteConfig) -> Report:
    report = Report("c2 invariant")
    k4 = complete_graph(4)
    k4_results = {p: c2(k4, p, cfg.point_budget) for p in (2, 3, 5)}
    report.add(
        "c2(K4) = -1 at p = 2, 3, 5",
        all(r.is_minus_one() for r in k4_results.values()),
        results={p: r.residue for p, r in k4_results.items()},
    )
    bad, not_div, rows = [], [], 0
    for rec in db.records():
        if rec.n > cfg.c2_max_n:
            continue
        for h in decompletions(rec.graph):
            for p in cfg.primes:
                res = c2(h, p, cfg.point_budget, cfg.workers)
                rows += 1
                if not res.divisible:
                    not_div.append({"graph6": rec.graph6, "p": p, "count": res.point_count})
                elif res.residue != p - 1:
                    bad.append({"graph6": rec.graph6, "p": p, "residue": res.residue})
    report.add(
        f"c2 = -1 for every decompletion up to order {cfg.c2_max_n}",
        not bad and not not_div,
        evaluations=rows,
        witnesses=bad,
    )
    report.add("p^2 divides every point count", not not_div, witnesses=not_div)
    return report


def criterion_rewrite(db: DescendantDatabase, cfg: SuiteConfig) -> Report:
    return cross_validate_rewrite(db, 8, 12)


def criterion_ancestors(db: DescendantDatabase, cfg: SuiteConfig) -> Report:
    return verify_ancestors(db, cfg.samples, cfg.seed, 12)


def criterion_structure(db: DescendantDatabase, cfg: SuiteConfig) -> Report:
    return verify_structure(db)


CRITERIA: dict[int, tuple[str, Callable[[DescendantDatabase, SuiteConfig], Report]]] = {
    1: ("Count table reproduction", criterion_table),
    2: ("Minimum triangles", criterion_min_triangles),
    3: ("Level propositions", criterion_levels),
    4: ("Generating functions", criterion_genfunc),
    5: ("c2 invariant", criterion_c2),
    6: ("Rewrite-rule cross-validation", criterion_rewrite),
    7: ("Ancestor property", criterion_ancestors),
    8: ("Structural exclusions", criterion_structure),
}


def run_all(db: DescendantDatabase, cfg: SuiteConfig = SuiteConfig()) -> dict[int, Report]:
    return {k: fn(db, cfg) for k, (_, fn) in CRITERIA.items()}
