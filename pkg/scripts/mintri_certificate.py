"""Closure certificate for the minimum-triangle theorem, plus the descendants
that attain the minimum."""

import argparse
import json

from dtdesc.chain_rewrite import verify_min_triangle_theorem
from dtdesc.enumerate import descendants_up_to, min_triangles


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-sum", type=int, default=12)
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--full", action="store_true", help="print every rule application")
    args = ap.parse_args()

    theorem = verify_min_triangle_theorem(args.max_sum)
    for closure in theorem.closures:
        cert = closure.certificate()
        print(f"start {cert['start']}: {len(cert['closure'])} vectors, largest sum {cert['largest_sum']}, "
              f"reached (3,3): {cert['reached_target']}")
        if args.full:
            print(json.dumps(cert, indent=2))
    best, witnesses = min_triangles(descendants_up_to(args.max_n))
    by_n: dict[int, int] = {}
    for w in witnesses:
        by_n[w.n] = by_n.get(w.n, 0) + 1
    print(f"minimum triangle count {best}; witnesses by order {by_n}")
    print("first:", [w.graph6 for w in witnesses if w.n == min(by_n)])


if __name__ == "__main__":
    main()
