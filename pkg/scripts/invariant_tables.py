#!/usr/bin/env python3
"""Print the named invariants for small configurations: L_n, the mixed
determinants M_{n,s}, the subset invariants M_{n,S} with their degrees, the
Dickson coefficients, and the operation words that generate each M_{n,S}
from the top exterior class.

Usage:
    python scripts/invariant_tables.py [--p P] [--n N]
"""

from __future__ import annotations

import argparse
from itertools import combinations

from mui import Ring, dickson, format_word, l_n, mui, mui_set, proof_word


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=3)
    parser.add_argument("--n", type=int, default=2)
    args = parser.parse_args(argv)
    ring = Ring(args.p, args.n)

    print(f"p = {ring.p}, n = {ring.n}")
    print(f"L_n = {l_n(ring)}   (degree {l_n(ring).total_degree()})")
    print()
    if not ring.mod2:
        for s in range(1, ring.n + 1):
            m = mui(ring, s)
            print(f"M_(n,{s}) = {m}   (degree {m.total_degree()})")
        print()
        for r in range(ring.n + 1):
            for subset in combinations(range(1, ring.n + 1), r):
                m = mui_set(ring, subset)
                label = "{" + ",".join(map(str, subset)) + "}"
                word = format_word(proof_word(ring, subset)) or "(identity)"
                print(
                    f"M_(n,{label:<9}) degree {m.total_degree():>3}  "
                    f"word {word:<12} = {m}"
                )
        print()
    for r in range(ring.n):
        c = dickson(ring, r)
        print(f"dickson c_(n,{r}) degree {c.total_degree():>3} = {c}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
