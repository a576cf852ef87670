"""c2 of every decompletion of every descendant up to a given order."""

import argparse
import time
from collections import Counter

from dtdesc.arith_c2 import c2
from dtdesc.dt_ops import decompletions
from dtdesc.enumerate import descendants_up_to


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--primes", default="2,3")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    primes = [int(p) for p in args.primes.split(",")]

    db = descendants_up_to(args.max_n)
    tally: Counter = Counter()
    for rec in db.records():
        for h in decompletions(rec.graph):
            for p in primes:
                start = time.perf_counter()
                res = c2(h, p, workers=args.workers)
                tally[(p, res.residue if res.divisible else "not divisible")] += 1
                print(f"{rec.graph6:<16} n={rec.n:<3} p={p}  [Psi]={res.point_count:<10} c2={res.residue}  "
                      f"({time.perf_counter() - start:.2f}s)")
    for (p, r), c in sorted(tally.items(), key=str):
        print(f"p={p}: residue {r} x{c}")


if __name__ == "__main__":
    main()
