#!/usr/bin/env python3
"""Rank the largest ABS spectral radii among all bicyclic graphs of each order.

Prints the top few graphs per order, marks which of them are g1(n) and g2(n),
and shows each value truncated to four places next to the rounded one.

    python3 scripts/reproduce_top2.py --n-min 5 --n-max 9 --k 3
"""

from __future__ import annotations

import argparse

from abs_spectra import families
from abs_spectra.graph_core import ClassSpec, graph6_decode, is_isomorphic
from abs_spectra.verify import top_k, truncate4


def label(g6: str, n: int) -> str:
    G = graph6_decode(g6)
    for name, build in (("g1", families.g1), ("g2", families.g2)):
        if is_isomorphic(G, build(n)):
            return name
    return ""


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-min", type=int, default=5)
    parser.add_argument("--n-max", type=int, default=9)
    parser.add_argument("--k", type=int, default=3)
    args = parser.parse_args()

    print(f"{'n':>3} {'rank':>4} {'eta1':>12} {'rounded':>8} {'trunc':>8} {'margin':>10}  {'graph6':<12} name")
    for n in range(args.n_min, args.n_max + 1):
        for r in top_k(ClassSpec(n, 2), args.k):
            print(
                f"{n:>3} {r.rank:>4} {r.value:>12.8f} {r.value:>8.4f} {truncate4(r.value):>8.4f} "
                f"{r.margin_to_next:>10.2e}  {r.graph:<12} {label(r.graph, n)}"
            )


if __name__ == "__main__":
    main()
