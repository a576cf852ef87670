"""How fast g_L(n) / (C_L n^(L-1)) approaches 1, and where it enters 1%."""

import argparse

from dtdesc.genfunc import ASYMPTOTIC_CONSTANTS, level_gf, series


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10000)
    args = ap.parse_args()

    samples = [n for n in (100, 500, 1000, 2000, 5000, 10000) if n <= args.max_n]
    for level, const in ASYMPTOTIC_CONSTANTS.items():
        coeffs = series(level_gf(level), args.max_n)
        ratio = [float(coeffs[n] / (const * n ** (level - 1))) if n else 0.0 for n in range(args.max_n + 1)]
        entry = next((n for n in range(args.max_n, 0, -1) if abs(ratio[n] - 1) > 0.01), 0) + 1
        cells = "  ".join(f"n={n}: {ratio[n]:.5f}" for n in samples)
        print(f"L={level} C={const}  {cells}  within 1% from n={entry}")


if __name__ == "__main__":
    main()
