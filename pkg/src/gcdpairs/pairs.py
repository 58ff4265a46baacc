"""gcd-pairs in Z_n: enumeration, restriction, counting, and the zero-divisor
partition with its unit-group matching.

A gcd-pair in Z_n is an unordered pair {a, b} of residues 0 <= a, b < n with
gcd(a, b) | n. Pairs are stored canonically as (a, b) tuples with a <= b, and
pair collections are kept in lexicographic order so that set comparisons and
golden tests are deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, NamedTuple

from .numtheory import (
    PrimePower,
    is_prime,
    nontrivial_divisors,
    phi_partial_sum,
    prime_power_decompose,
)


@dataclass(frozen=True)
class GcdPair:
    """A validated single gcd-pair; collections use bare (a, b) tuples instead."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")
        if not 0 <= self.a <= self.b < self.n:
            raise ValueError(f"need 0 <= a <= b < n, got a={self.a}, b={self.b}, n={self.n}")
        g = gcd(self.a, self.b)
        if g == 0 or self.n % g != 0:
            raise ValueError(f"gcd({self.a},{self.b}) = {g} does not divide {self.n}")

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class PairSet:
    """A deduplicated, lexicographically ordered collection of gcd-pairs.

    `label` says which set this is ("full", "units", "zero-divisors", or
    "subset:..."); for restrictions `subset` carries the actual residue set.
    """

    n: int
    pairs: tuple[tuple[int, int], ...]
    label: str = "full"
    subset: frozenset[int] | None = None

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in set(self.pairs)

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "label": self.label,
            "pairs": [[a, b] for a, b in self.pairs],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "PairSet":
        pairs = tuple((int(a), int(b)) for a, b in payload["pairs"])
        return cls(n=int(payload["n"]), pairs=pairs, label=str(payload["label"]))


class ElementClasses(NamedTuple):
    zero: frozenset[int]
    units: frozenset[int]
    zero_divisors: frozenset[int]


@dataclass(frozen=True)
class ZeroDivisorPartition:
    """Cells S'_d = {r*d : 1 <= r < n/d, gcd(r*d, n) = d} over proper
    nontrivial divisors d of n; disjoint, and their union is the zero divisors."""

    n: int
    cells: dict[int, frozenset[int]]

    def union(self) -> frozenset[int]:
        out: set[int] = set()
        for cell in self.cells.values():
            out |= cell
        return frozenset(out)


class CountKind(enum.Enum):
    EXACT = "exact"
    STRICT_LOWER_BOUND = "strict-lower-bound"
    LOWER_BOUND = "lower-bound"


@dataclass(frozen=True)
class CountResult:
    """A count or bound together with which closed form produced it."""

    value: int
    kind: CountKind
    provenance: str

    def to_json_dict(self) -> dict:
        return {"value": self.value, "kind": self.kind.value, "provenance": self.provenance}


def canonical_residue(n: int, x: int) -> int:
    """The unique r in [0, n) with x == r (mod n); negatives welcome."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    return x % n


def is_gcd_pair(n: int, x: int, y: int) -> bool:
    """Reduce x, y mod n and test gcd | n; (0, 0) is never a pair."""
    a = canonical_residue(n, x)
    b = canonical_residue(n, y)
    g = gcd(a, b)
    return g > 0 and n % g == 0


def iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All gcd-pairs of Z_n in lexicographic order, streamed.

    Fast path: when a | n every pair {a, b} with a <= b < n qualifies
    (gcd(a, b) divides a divides n), so the whole row is emitted with no gcd
    computation. The a = 0 row pairs 0 with exactly the divisors of n.
    """
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    for b in range(1, n):
        if n % b == 0:
            yield (0, b)
    for a in range(1, n):
        if n % a == 0:
            for b in range(a, n):
                yield (a, b)
        else:
            for b in range(a, n):
                if n % gcd(a, b) == 0:
                    yield (a, b)


def enumerate_pairs(n: int) -> PairSet:
    """The full gcd-pair set of Z_n, materialized."""
    return PairSet(n=n, pairs=tuple(iter_pairs(n)), label="full")


def restrict(ps: PairSet, subset: Iterable[int], label: str | None = None) -> PairSet:
    """Pairs of `ps` with both endpoints in `subset`."""
    chosen = frozenset(subset)
    for x in chosen:
        if not 0 <= x < ps.n:
            raise ValueError(f"subset element {x} outside [0, {ps.n})")
    kept = tuple(p for p in ps.pairs if p[0] in chosen and p[1] in chosen)
    if label is None:
        label = "subset:" + ",".join(map(str, sorted(chosen)))
    return PairSet(n=ps.n, pairs=kept, label=label, subset=chosen)


def classify_elements(n: int) -> ElementClasses:
    """Partition Z_n (n >= 2) into {0}, units, and zero divisors."""
    if n < 2:
        raise ValueError(f"classify_elements requires n >= 2, got {n}")
    units = frozenset(a for a in range(1, n) if gcd(a, n) == 1)
    zero_divisors = frozenset(range(1, n)) - units
    return ElementClasses(frozenset({0}), units, zero_divisors)


def zero_divisor_partition(n: int) -> ZeroDivisorPartition:
    """Partition the zero divisors of Z_n into the cells S'_d."""
    if n < 2:
        raise ValueError(f"zero_divisor_partition requires n >= 2, got {n}")
    cells: dict[int, frozenset[int]] = {}
    for d in nontrivial_divisors(n):
        if d == n:
            continue  # r < n/d = 1 is impossible; the cell is always empty
        cell = frozenset(r * d for r in range(1, n // d) if gcd(r * d, n) == d)
        if cell:
            cells[d] = cell
    return ZeroDivisorPartition(n=n, cells=cells)


def count_prime_power_formula(pp: PrimePower) -> CountResult:
    """|full pair set of Z_{p^k}| = k + sum_{i=1..k} sum_{j=1..p^i - 1} phi(j)."""
    total = pp.k
    for i in range(1, pp.k + 1):
        total += phi_partial_sum(pp.p**i - 1)
    return CountResult(total, CountKind.EXACT, "prime-power-formula")


def composite_lower_bound(n: int) -> CountResult:
    """For composite n the full pair count strictly exceeds 1 + sum phi(1..n-1)."""
    if n < 4 or is_prime(n):
        raise ValueError(f"composite_lower_bound requires composite n >= 4, got {n}")
    return CountResult(
        1 + phi_partial_sum(n - 1), CountKind.STRICT_LOWER_BOUND, "summatory-totient-bound"
    )


def semiprime_zero_divisor_bound(p: int, q: int) -> CountResult:
    """For distinct primes p, q: zero-divisor pairs of Z_{pq} number at least
    |pairs(Z_p)| + |pairs(Z_q)| + p + q - 5."""
    if p == q or not (is_prime(p) and is_prime(q)):
        raise ValueError(f"need distinct primes, got {p} and {q}")
    value = (
        count_prime_power_formula(PrimePower(p, 1)).value
        + count_prime_power_formula(PrimePower(q, 1)).value
        + p
        + q
        - 5
    )
    return CountResult(value, CountKind.LOWER_BOUND, "two-prime-lower-bound")


def divisor_cell_sum_bound(n: int) -> CountResult:
    """General composite bound: zero-divisor pairs of Z_n number at least the sum,
    over nontrivial divisors d of n, of the unit-restricted pair counts of Z_{n/d}.

    Each cell S'_d matches the unit-restricted pairs of Z_{n/d} one-to-one
    (see cell_unit_matching); cross-cell pairs make the inequality strict in general.
    """
    if n < 2:
        raise ValueError(f"divisor_cell_sum_bound requires n >= 2, got {n}")
    total = 0
    for d in nontrivial_divisors(n):
        m = n // d
        if m < 2:
            continue  # the d = n cell is empty and Z_1 has no pairs
        units = classify_elements(m).units
        total += len(restrict(enumerate_pairs(m), units, label="units"))
    return CountResult(total, CountKind.LOWER_BOUND, "divisor-cell-sum")


def count_zero_divisor_closed(n: int) -> CountResult:
    """Best closed form for the number of pairs among the zero divisors of Z_n.

    Exact for primes (0), prime powers, 2p (p odd) and 3p (p != 3, p >= 5 after
    the 2p branch); a lower bound for other semiprimes and general composites.
    """
    if n < 2:
        raise ValueError(f"count_zero_divisor_closed requires n >= 2, got {n}")
    pp = prime_power_decompose(n)
    if pp is not None:
        if pp.k == 1:
            return CountResult(0, CountKind.EXACT, "prime-has-no-zero-divisors")
        inner = count_prime_power_formula(PrimePower(pp.p, pp.k - 1)).value
        return CountResult(inner - pp.k + 1, CountKind.EXACT, "prime-power-reduction")
    if n % 2 == 0 and is_prime(n // 2) and n // 2 != 2:
        p = n // 2
        base = count_prime_power_formula(PrimePower(p, 1)).value
        return CountResult(base + p - 1, CountKind.EXACT, "double-prime-count")
    if n % 3 == 0 and is_prime(n // 3) and n // 3 != 3:
        p = n // 3
        base = count_prime_power_formula(PrimePower(p, 1)).value
        # ceil((p - 1) / 2) == p // 2 for integer p
        return CountResult(base + p + p // 2, CountKind.EXACT, "triple-prime-count")
    divs = nontrivial_divisors(n)
    proper = [d for d in divs if d != n]
    if len(proper) == 2 and is_prime(proper[0]) and is_prime(proper[1]):
        return semiprime_zero_divisor_bound(proper[0], proper[1])
    return divisor_cell_sum_bound(n)


def cell_unit_matching(n: int, d: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """The bijection between pairs inside the cell S'_d and the unit-restricted
    pairs of Z_m, m = n/d: {r*d, s*d} <-> {r, s}.

    Returns the complete matching as ((rd, sd), (r, s)) entries, lexicographic by
    the left pair. Both projections are validated to be exactly the two pair sets.
    """
    if n < 2:
        raise ValueError(f"cell_unit_matching requires n >= 2, got {n}")
    partition = zero_divisor_partition(n)
    if d not in partition.cells:
        raise ValueError(f"{d} is not a proper nontrivial divisor of {n} with a nonempty cell")
    m = n // d
    cell = partition.cells[d]
    left = restrict(enumerate_pairs(n), cell, label=f"cell:{d}")
    units = classify_elements(m).units
    right = restrict(enumerate_pairs(m), units, label="units")
    matching = [((a, b), (a // d, b // d)) for a, b in left.pairs]
    image = sorted(pair for _, pair in matching)
    if image != sorted(right.pairs) or len(matching) != len(set(image)):
        raise AssertionError(f"cell-to-unit matching failed for n={n}, d={d}")
    return matching
