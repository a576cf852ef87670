"""Compare graph-level reductions and expansions with the chain-vector rules."""

import argparse
import json

from dtdesc.enumerate import cross_validate_rewrite, descendants_up_to, dte_type_agreement


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=8)
    ap.add_argument("--hi", type=int, default=12)
    args = ap.parse_args()

    db = descendants_up_to(args.hi)
    for report in (cross_validate_rewrite(db, args.lo, args.hi), dte_type_agreement(db, args.lo, args.hi)):
        print(report.title)
        print(report.summary())
        for check in report.checks:
            extra = {k: v for k, v in check.detail.items() if k != "witnesses"}
            if extra:
                print(json.dumps(extra, indent=2, default=str))


if __name__ == "__main__":
    main()
