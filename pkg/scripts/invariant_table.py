#!/usr/bin/env python3
"""Tabulate pair counts and graph invariants over a range of moduli.

Example:
    python scripts/invariant_table.py --start 2 --stop 20
"""

import argparse

from gcdpairs.graph import SearchBounds, analyze, build
from gcdpairs.pairs import classify_elements, enumerate_pairs, restrict


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--start", type=int, default=2)
    parser.add_argument("--stop", type=int, default=30)
    args = parser.parse_args()

    bounds = SearchBounds.from_env()
    header = f"{'n':>4} {'pairs':>7} {'zd-pairs':>8} {'edges':>6} {'omega':>5} {'chi':>4} {'ham':>4} {'planar':>6}"
    print(header)
    print("-" * len(header))
    for n in range(max(args.start, 2), args.stop + 1):
        ps = enumerate_pairs(n)
        zd = restrict(ps, classify_elements(n).zero_divisors)
        g = build(n)
        invariants, _ = analyze(g, bounds)
        omega = invariants["clique_number"]
        chi = invariants["chromatic_number"]
        print(
            f"{n:>4} {len(ps):>7} {len(zd):>8} {len(g.simple_edges):>6} "
            f"{'-' if omega is None else omega:>5} {'-' if chi is None else chi:>4} "
            f"{'yes' if invariants['hamiltonian'] else 'no':>4} "
            f"{'yes' if invariants['planar'] else 'no':>6}"
        )


if __name__ == "__main__":
    main()
