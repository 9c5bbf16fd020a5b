#!/usr/bin/env python3
"""List enumerated graphs where eta1 exceeds sqrt((n-2)/n) * lambda1.

Each violator is shown with its largest edge degree sum; the bound can only
fail when that sum exceeds n.

    python3 scripts/domination_counterexamples.py --n-max 9
"""

from __future__ import annotations

import argparse
import math

from abs_spectra.enumeration import class_members
from abs_spectra.graph_core import ClassSpec, graph6_encode
from abs_spectra.spectral import eta1, lambda1


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=9)
    args = parser.parse_args()

    print(f"{'class':<14} {'n':>2} {'graph6':<10} {'eta1':>9} {'bound':>9} {'max di+dj':>9}")
    for n in range(4, args.n_max + 1):
        classes = (("bip-unicyclic", ClassSpec(n, 1, bipartite=True)), ("bicyclic", ClassSpec(n, 2)))
        for name, spec in classes:
            for G in class_members(spec):
                e = eta1(G)
                bound = math.sqrt((n - 2) / n) * lambda1(G)
                if e > bound + 1e-10:
                    top = max(G.deg[u] + G.deg[v] for u, v in G.edges)
                    print(f"{name:<14} {n:>2} {graph6_encode(G):<10} {e:>9.6f} {bound:>9.6f} {top:>9}")


if __name__ == "__main__":
    main()
