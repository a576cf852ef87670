"""Enumerate descendants and print the (n, t) table next to the reference counts."""

import argparse
import time

from dtdesc.enumerate import count_table, descendants_up_to
from dtdesc.reference import PUBLISHED_COUNTS, PUBLISHED_T_RANGE


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    start = time.perf_counter()
    db = descendants_up_to(args.max_n, args.workers)
    counts = count_table(db)
    ts = list(PUBLISHED_T_RANGE)
    print("n \\ t " + " ".join(f"{t:>5}" for t in ts) + "   total  seconds")
    for n in sorted(db.layers):
        cells = []
        for t in ts:
            got, want = counts.get((n, t), 0), PUBLISHED_COUNTS.get((n, t), 0)
            cells.append(f"{got:>5}" if got == want else f"{got:>4}!")
        print(f"{n:>5} " + " ".join(cells) + f"   {len(db.layers[n]):>5}  {db.seconds.get(n, 0):7.2f}")
    print(f"total {sum(db.layer_sizes())} descendants in {time.perf_counter() - start:.1f}s ('!' marks a mismatch)")


if __name__ == "__main__":
    main()
