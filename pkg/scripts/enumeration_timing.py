#!/usr/bin/env python3
"""Compare the divisor-shortcut enumeration against the literal double loop.

The shortcut emits whole rows without gcd computation whenever the row index
divides the modulus. To compare algorithms rather than runtimes of different
stacks, the literal loop here is plain Python too; the vectorized oracle count
is used only to confirm both agree.

Example:
    python scripts/enumeration_timing.py --sizes 500,1000,2000
"""

import argparse
import time
from math import gcd

from gcdpairs.oracle import naive_count
from gcdpairs.pairs import iter_pairs


def literal_pairs(n: int):
    for a in range(n):
        for b in range(a, n):
            g = gcd(a, b)
            if g and n % g == 0:
                yield (a, b)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="360,720,1440,2880")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    sum(1 for _ in iter_pairs(min(sizes)))  # warm up before timing
    print(f"{'n':>6} {'pairs':>10} {'shortcut (s)':>13} {'literal (s)':>12} {'speedup':>8}")
    for n in sizes:
        start = time.perf_counter()
        count = sum(1 for _ in iter_pairs(n))
        fast = time.perf_counter() - start
        start = time.perf_counter()
        literal = sum(1 for _ in literal_pairs(n))
        slow = time.perf_counter() - start
        assert count == literal == naive_count(n), f"counts disagree at n={n}"
        speedup = slow / fast if fast else float("inf")
        print(f"{n:>6} {count:>10} {fast:>13.3f} {slow:>12.3f} {speedup:>8.2f}")


if __name__ == "__main__":
    main()
