#!/usr/bin/env python3
"""Closed form versus Jacobi for the ABS spectral radius of h1_bip(n).

    python3 scripts/h1_table.py --n-max 200 --every 15
"""

from __future__ import annotations

import argparse
import math

from abs_spectra import families
from abs_spectra.spectral import eta1


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-min", type=int, default=5)
    parser.add_argument("--n-max", type=int, default=200)
    parser.add_argument("--every", type=int, default=15)
    args = parser.parse_args()

    print(f"{'n':>4} {'radicand A':>18} {'closed eta1^2':>16} {'jacobi eta1^2':>16} {'gap':>9} {'(n-2)/sqrt(n)':>14}")
    worst = 0.0
    for n in range(args.n_min, args.n_max + 1):
        closed = families.eta1_sq_h1_closed_form(n)
        value = eta1(families.h1_bip(n)) ** 2
        gap = abs(closed - value)
        worst = max(worst, gap)
        if (n - args.n_min) % args.every == 0 or n == args.n_max:
            print(
                f"{n:>4} {families.h1_radicand(n):>18} {closed:>16.10f} {value:>16.10f} {gap:>9.1e} "
                f"{(n - 2) / math.sqrt(n):>14.6f}"
            )
    print(f"worst gap over n = {args.n_min}..{args.n_max}: {worst:.2e}")


if __name__ == "__main__":
    main()
