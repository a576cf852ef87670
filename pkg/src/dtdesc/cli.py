"""Command-line entry point: ``dtdesc <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .arith_c2 import POINT_BUDGET, c2, is_prime
from .chain_rewrite import classify_outcome, dte_children, dtr_closure, dtr_parents, parse, verify_min_triangle_theorem
from .dt_ops import decompletions
from .enumerate import (
    MAX_N,
    MIN_N,
    count_table,
    default_cache_dir,
    descendants_up_to,
    min_triangles,
    save_layer,
    write_count_csv,
)
from .errors import BudgetExceeded, ChainVectorError, DtdescError, UnsupportedLevel
from .genfunc import level_gf, series
from .graph6 import from_graph6

log = logging.getLogger("dtdesc")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3

COMMANDS = ("enumerate", "table", "verify", "c2", "gf", "chainvec", "mintri")
FORMATS = ("csv", "json", "g6")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    max_n: int = 14
    primes: tuple[int, ...] = (2, 3)
    level: int = 2
    terms: int = 14
    out: Optional[Path] = None
    format: str = "csv"
    workers: int = 1
    seed: int = 0
    max_sum: int = 12
    point_budget: int = POINT_BUDGET
    vector: Optional[str] = None
    graph6: Optional[str] = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if not MIN_N <= self.max_n <= MAX_N:
            raise ConfigError(f"--max-n must lie in [{MIN_N}, {MAX_N}]")
        if self.max_sum <= 0 or self.point_budget <= 0 or self.terms < 0:
            raise ConfigError("budgets must be positive")
        if self.workers < 1:
            raise ConfigError("--workers must be at least 1")
        if self.format not in FORMATS:
            raise ConfigError(f"--format must be one of {', '.join(FORMATS)}")
        bad = [p for p in self.primes if not is_prime(p)]
        if bad:
            raise ConfigError(f"not prime: {bad}")
        if self.command == "chainvec" and not self.vector:
            raise ConfigError("chainvec needs a vector, e.g. 2,0,1,0")


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    log.info("wrote %s", out)


def _csv(rows: Sequence[Sequence], header: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _database(cfg: RunConfig):
    return descendants_up_to(cfg.max_n, cfg.workers, default_cache_dir())


def cmd_enumerate(cfg: RunConfig) -> int:
    out = cfg.out or default_cache_dir() or Path("data")
    db = descendants_up_to(cfg.max_n, cfg.workers, default_cache_dir())
    for n in sorted(db.layers):
        save_layer(out, n, [rec.form.bytes for rec in db.layer(n)])
    write_count_csv(db, out / "counts.csv")
    for n, size in zip(sorted(db.layers), db.layer_sizes()):
        print(f"n={n}: {size}")
    return EXIT_OK


def cmd_table(cfg: RunConfig) -> int:
    db = _database(cfg)
    counts = count_table(db)
    if cfg.format == "json":
        data = [{"n": n, "t": t, "count": c} for (n, t), c in sorted(counts.items())]
        _emit(json.dumps(data, indent=2) + "\n", cfg.out)
    elif cfg.format == "g6":
        lines = [rec.graph6 for rec in db.records()]
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        _emit(_csv([(n, t, c) for (n, t), c in sorted(counts.items())], ("n", "t", "count")), cfg.out)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    from .verify import CRITERIA, SuiteConfig, run_all

    db = _database(cfg)
    suite = SuiteConfig(
        primes=cfg.primes,
        point_budget=cfg.point_budget,
        workers=cfg.workers,
        seed=cfg.seed,
        max_sum=cfg.max_sum,
    )
    reports = run_all(db, suite)
    for k, report in reports.items():
        status = "PASS" if report.passed else "FAIL"
        print(f"[{status}] criterion {k}: {CRITERIA[k][0]}")
        for check in report.checks:
            print(f"    {check.line()}")
    if cfg.out:
        data = {str(k): r.to_dict() for k, r in reports.items()}
        _emit(json.dumps(data, indent=2, sort_keys=True, default=str) + "\n", cfg.out)
    return EXIT_OK if all(r.passed for r in reports.values()) else EXIT_FAILED


def cmd_c2(cfg: RunConfig) -> int:
    if cfg.graph6:
        graphs = [(cfg.graph6, from_graph6(cfg.graph6))]
    else:
        db = _database(cfg)
        graphs = []
        for rec in db.records():
            for h in decompletions(rec.graph):
                graphs.append((rec.graph6, h))
    rows = []
    failed = False
    for name, h in graphs:
        for p in cfg.primes:
            res = c2(h, p, cfg.point_budget, cfg.workers)
            rows.append((name, p, res.point_count, res.residue))
            failed |= not res.divisible
    if cfg.format == "json":
        data = [dict(zip(("graph6", "p", "point_count", "residue"), r)) for r in rows]
        _emit(json.dumps(data, indent=2) + "\n", cfg.out)
    else:
        _emit(_csv(rows, ("graph6", "p", "point_count", "residue")), cfg.out)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_gf(cfg: RunConfig) -> int:
    coeffs = series(level_gf(cfg.level), cfg.terms)
    if cfg.format == "json":
        _emit(json.dumps({"level": cfg.level, "coefficients": coeffs}) + "\n", cfg.out)
    else:
        _emit(_csv(list(enumerate(coeffs)), ("n", "coefficient")), cfg.out)
    return EXIT_OK


def cmd_chainvec(cfg: RunConfig) -> int:
    cv = parse(cfg.vector)
    closure = dtr_closure(cv, cfg.max_sum)
    data = {
        "vector": str(cv),
        "outcome": classify_outcome(cv).value,
        "children": sorted(f"{list(t)} -> {c}" for t, c in dte_children(cv)),
        "parents": sorted(f"{list(t)} -> {p}" for t, p in dtr_parents(cv)),
        "closure": closure.certificate(),
    }
    _emit(json.dumps(data, indent=2) + "\n", cfg.out)
    return EXIT_OK


def cmd_mintri(cfg: RunConfig) -> int:
    theorem = verify_min_triangle_theorem(cfg.max_sum)
    data = json.loads(theorem.to_json())
    ok = theorem.passed
    if cfg.max_n >= 10:
        db = _database(cfg)
        best, witnesses = min_triangles(db)
        first = min(w.n for w in witnesses)
        data["enumeration"] = {
            "max_n": cfg.max_n,
            "minimum": best,
            "first_order": first,
            "witnesses": {str(n): sum(1 for w in witnesses if w.n == n) for n in sorted({w.n for w in witnesses})},
            "first_witnesses": [w.graph6 for w in witnesses if w.n == first],
        }
        ok = ok and best == 4
    _emit(json.dumps(data, indent=2) + "\n", cfg.out)
    return EXIT_OK if ok else EXIT_FAILED


HANDLERS = {
    "enumerate": cmd_enumerate,
    "table": cmd_table,
    "verify": cmd_verify,
    "c2": cmd_c2,
    "gf": cmd_gf,
    "chainvec": cmd_chainvec,
    "mintri": cmd_mintri,
}


def run(cfg: RunConfig) -> int:
    try:
        cfg.validate()
        return HANDLERS[cfg.command](cfg)
    except BudgetExceeded as exc:
        log.error("budget exceeded: %s", exc)
        return EXIT_BUDGET
    except (ConfigError, ChainVectorError, UnsupportedLevel, ValueError) as exc:
        log.error("bad configuration: %s", exc)
        return EXIT_CONFIG
    except DtdescError as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_CONFIG


def _primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dtdesc", description="Double triangle descendants of K5.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, max_n: int = 14) -> None:
        p.add_argument("--max-n", type=int, default=max_n)
        p.add_argument("--out", type=Path)
        p.add_argument("--format", default="csv", choices=FORMATS)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-sum", type=int, default=12)
        p.add_argument("--point-budget", type=int, default=POINT_BUDGET)
        p.add_argument("--primes", type=_primes, default=(2, 3))

    common(sub.add_parser("enumerate", help="generate layer files and the count table"))
    common(sub.add_parser("table", help="count table by (n, t)"))
    common(sub.add_parser("verify", help="run every acceptance suite"))
    p = sub.add_parser("c2", help="c2 invariants of decompletions")
    common(p, max_n=8)
    p.add_argument("--graph6", help="a single graph instead of the enumerated decompletions")
    p = sub.add_parser("gf", help="series of a level generating function")
    common(p)
    p.add_argument("--level", type=int, default=2)
    p.add_argument("--terms", type=int, default=14)
    p = sub.add_parser("chainvec", help="normal form, transitions and closure of a chain vector")
    common(p)
    p.add_argument("vector", help="entries separated by commas; trailing * closed, o open")
    common(sub.add_parser("mintri", help="minimum triangle certificate"))
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        max_n=args.max_n,
        primes=tuple(args.primes),
        level=getattr(args, "level", 2),
        terms=getattr(args, "terms", 14),
        out=args.out,
        format=args.format,
        workers=args.workers,
        seed=args.seed,
        max_sum=args.max_sum,
        point_budget=args.point_budget,
        vector=getattr(args, "vector", None),
        graph6=getattr(args, "graph6", None),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
