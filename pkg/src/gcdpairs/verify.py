"""Re-derives every documented claim about gcd-pairs and their graphs by
independent brute force, and reports per-claim outcomes.

Statuses:
  PASS        the claim holds on the tested range.
  FAIL        an implementation contradicts a claim known to be true
              (a regression, never expected).
  DISCREPANCY brute force contradicts the claimed statement itself; the entry
              records claimed vs observed values. Expected exactly for the
              two-prime-product clique order (and the coloring bound derived
              from it) whenever q > p^2.
  NOTED       informational errata entries (documented typos, edge-case gaps).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Callable

from . import oracle
from .graph import (
    DEFAULT_BOUNDS,
    SearchBounds,
    build,
    chromatic_number,
    clique_construction,
    domination_number,
    has_triangle,
    hamiltonian_cycle,
    hamiltonian_path,
    is_connected,
    is_planar,
    longest_cycle_constructive,
    max_clique,
    star_subgraph,
)
from .numtheory import (
    PrimePower,
    divisors,
    is_prime,
    nontrivial_divisors,
    phi_sieve,
    primes_below,
)
from .pairs import (
    classify_elements,
    count_prime_power_formula,
    count_zero_divisor_closed,
    divisor_cell_sum_bound,
    is_gcd_pair,
    semiprime_zero_divisor_bound,
    zero_divisor_partition,
)


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    DISCREPANCY = "discrepancy"
    NOTED = "noted"


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    statement: str
    range_tested: str
    status: Status
    details: str

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "statement": self.statement,
            "range": self.range_tested,
            "status": self.status.value,
            "details": self.details,
        }


@dataclass
class VerificationReport:
    entries: list[ClaimResult]

    @property
    def failures(self) -> list[ClaimResult]:
        return [e for e in self.entries if e.status is Status.FAIL]

    @property
    def discrepancies(self) -> list[ClaimResult]:
        return [e for e in self.entries if e.status is Status.DISCREPANCY]

    def entry(self, claim_id: str) -> ClaimResult:
        for e in self.entries:
            if e.claim_id == claim_id:
                return e
        raise KeyError(claim_id)

    def to_text(self) -> str:
        width = max(len(e.claim_id) for e in self.entries) if self.entries else 10
        lines = []
        for e in self.entries:
            lines.append(
                f"[{e.status.value.upper():<11}] {e.claim_id:<{width}}  "
                f"{e.range_tested:<14}  {e.details}"
            )
        tally = {s: sum(1 for e in self.entries if e.status is s) for s in Status}
        lines.append(
            f"summary: {tally[Status.PASS]} pass, {tally[Status.FAIL]} fail, "
            f"{tally[Status.DISCREPANCY]} discrepancy, {tally[Status.NOTED]} noted"
        )
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {"schema": 1, "entries": [e.to_json_dict() for e in self.entries]}


def _ring_pair(n: int, a: int, b: int) -> bool:
    # ground-truth predicate, written from the definition on purpose
    g = gcd(a % n, b % n)
    return g > 0 and n % g == 0


# --- pair characterizations ---------------------------------------------------


def _claim_pair_when_divisor(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    checked = 0
    for n in range(1, limit + 1):
        for a in divisors(n):
            if a >= n:
                continue
            for b in range(n):
                checked += 1
                if not _ring_pair(n, a, b):
                    return (f"n <= {limit}", Status.DISCREPANCY, f"fails at n={n}, a={a}, b={b}")
                if not is_gcd_pair(n, a, b):
                    return (f"n <= {limit}", Status.FAIL, f"is_gcd_pair(n={n},{a},{b}) is False")
    return (f"n <= {limit}", Status.PASS, f"{checked} divisor pairs confirmed")


def _claim_unit_pairs_coprime(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    checked = 0
    for n in range(2, limit + 1):
        for a in classify_elements(n).units:
            for b in range(n):
                if _ring_pair(n, a, b):
                    checked += 1
                    if gcd(a, b) != 1:
                        return (
                            f"n <= {limit}",
                            Status.DISCREPANCY,
                            f"unit pair with gcd > 1 at n={n}, a={a}, b={b}",
                        )
    return (f"n <= {limit}", Status.PASS, f"{checked} unit pairs all coprime")


# --- counting formulas ----------------------------------------------------------


def _prime_powers_upto(limit: int) -> list[PrimePower]:
    out = []
    for p in primes_below(limit + 1):
        k = 1
        while p**k <= limit:
            out.append(PrimePower(p, k))
            k += 1
    return sorted(out, key=lambda pp: pp.value)


def _claim_prime_power_count(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    pps = _prime_powers_upto(limit)
    for pp in pps:
        expected = count_prime_power_formula(pp).value
        actual = oracle.naive_count(pp.value)
        if expected != actual:
            return (
                f"p^k <= {limit}",
                Status.FAIL,
                f"formula {expected} != enumeration {actual} at n={pp.value}",
            )
    return (f"p^k <= {limit}", Status.PASS, f"{len(pps)} prime powers match enumeration")


def _claim_composite_bound(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    phi = phi_sieve(limit)
    running = 0
    checked = 0
    for n in range(2, limit + 1):
        running += phi[n - 1] if n >= 2 else 0
        if is_prime(n) or n < 4:
            continue
        checked += 1
        bound = 1 + running  # 1 + sum phi(1..n-1)
        actual = oracle.naive_count(n)
        if not actual > bound:
            return (
                f"composite n <= {limit}",
                Status.FAIL,
                f"count {actual} not above bound {bound} at n={n}",
            )
    return (f"composite n <= {limit}", Status.PASS, f"{checked} composites strictly above bound")


def _claim_partition(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    for n in range(2, limit + 1):
        part = zero_divisor_partition(n)
        union: set[int] = set()
        total = 0
        for cell in part.cells.values():
            union |= cell
            total += len(cell)
        if total != len(union):
            return (f"n <= {limit}", Status.DISCREPANCY, f"cells overlap at n={n}")
        if union != classify_elements(n).zero_divisors:
            return (
                f"n <= {limit}",
                Status.DISCREPANCY,
                f"cells do not cover the zero divisors at n={n}",
            )
    return (f"n <= {limit}", Status.PASS, "cells are disjoint and cover the zero divisors")


def _zero_divisor_pairs_naive(n: int) -> int:
    return oracle.naive_restricted_count(n, classify_elements(n).zero_divisors)


def _claim_cell_sum_bound(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    unit_counts: dict[int, int] = {}

    def units_count(m: int) -> int:
        if m not in unit_counts:
            unit_counts[m] = oracle.naive_restricted_count(m, classify_elements(m).units)
        return unit_counts[m]

    for n in range(2, limit + 1):
        lhs = _zero_divisor_pairs_naive(n)
        rhs = sum(units_count(n // d) for d in nontrivial_divisors(n) if n // d >= 2)
        if lhs < rhs:
            return (
                f"n <= {limit}",
                Status.DISCREPANCY,
                f"zero-divisor pairs {lhs} below cell sum {rhs} at n={n}",
            )
        formula = divisor_cell_sum_bound(n).value
        if formula != rhs:
            return (
                f"n <= {limit}",
                Status.FAIL,
                f"divisor_cell_sum_bound {formula} != brute cell sum {rhs} at n={n}",
            )
    return (f"n <= {limit}", Status.PASS, "zero-divisor pair count dominates the cell sum")


def _claim_semiprime_bound(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    sample = ""
    checked = 0
    for p in primes_below(limit):
        for q in primes_below(limit // p + 1):
            if q <= p or p * q > limit:
                continue
            n = p * q
            checked += 1
            bound = semiprime_zero_divisor_bound(p, q).value
            actual = _zero_divisor_pairs_naive(n)
            if actual < bound:
                return (
                    f"pq <= {limit}",
                    Status.DISCREPANCY,
                    f"bound {bound} exceeds actual {actual} at n={n}",
                )
            if n == 15:
                sample = f"; n=15 reproduces bound {bound} <= actual {actual}"
    return (f"pq <= {limit}", Status.PASS, f"{checked} semiprimes respect the bound{sample}")


def _claim_double_prime(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    checked = 0
    for p in primes_below(limit // 2 + 1):
        if p == 2:
            continue
        n = 2 * p
        result = count_zero_divisor_closed(n)
        actual = _zero_divisor_pairs_naive(n)
        if result.kind.value != "exact" or result.value != actual:
            return (
                f"2p <= {limit}",
                Status.FAIL,
                f"closed form {result.value} ({result.kind.value}) != actual {actual} at n={n}",
            )
        checked += 1
    return (f"2p <= {limit}", Status.PASS, f"{checked} values exact")


def _claim_triple_prime(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    checked = 0
    for p in primes_below(limit // 3 + 1):
        if p == 3:
            continue
        n = 3 * p
        expected = count_prime_power_formula(PrimePower(p, 1)).value + p + p // 2
        actual = _zero_divisor_pairs_naive(n)
        if expected != actual:
            return (
                f"3p <= {limit}",
                Status.FAIL,
                f"closed form {expected} != actual {actual} at n={n}",
            )
        checked += 1
    return (f"3p <= {limit}", Status.PASS, f"{checked} values exact")


def _claim_prime_power_zero_divisors(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    pps = _prime_powers_upto(limit)
    for pp in pps:
        n = pp.value
        result = count_zero_divisor_closed(n)
        actual = _zero_divisor_pairs_naive(n) if n >= 2 else 0
        if result.kind.value != "exact" or result.value != actual:
            return (
                f"p^k <= {limit}",
                Status.FAIL,
                f"closed form {result.value} != actual {actual} at n={n}",
            )
    return (f"p^k <= {limit}", Status.PASS, f"{len(pps)} prime powers exact (primes give 0)")


# --- graph propositions ---------------------------------------------------------


def _claim_embedding(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    checked = 0
    for n in range(1, limit + 1):
        gn = build(n)
        for m in divisors(n):
            if m == n:
                continue
            gm = build(m)
            if not gm.simple_edges <= gn.simple_edges or not gm.loops <= gn.loops:
                return (f"m|n <= {limit}", Status.FAIL, f"G_{m} does not embed in G_{n}")
            checked += 1
    return (f"m|n <= {limit}", Status.PASS, f"{checked} divisor embeddings verified")


def _claim_star(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    for n in range(2, limit + 1):
        w = star_subgraph(build(n))  # raises if any spoke is missing
        if w.center != 1 or len(w.leaves) != n - 1:
            return (f"n <= {limit}", Status.FAIL, f"star at n={n} malformed")
    return (f"n <= {limit}", Status.PASS, "vertex 1 centers a full star in every graph")


def _claim_domination(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    for n in range(2, limit + 1):
        gamma, witness = domination_number(build(n))
        if gamma != 1 or witness != frozenset({1}):
            return (f"n <= {limit}", Status.FAIL, f"domination ({gamma}, {sorted(witness)}) at n={n}")
        if n <= oracle.MAX_DOMINATION_N and oracle.exhaustive_domination(build(n)) != 1:
            return (f"n <= {limit}", Status.FAIL, f"oracle domination differs at n={n}")
    return (f"n <= {limit}", Status.PASS, "domination number 1 with witness {1} everywhere")


def _claim_connectivity(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    for n in range(1, limit + 1):
        if not is_connected(build(n)):
            return (f"n <= {limit}", Status.FAIL, f"G_{n} not connected")
    return (f"n <= {limit}", Status.PASS, "every graph connected")


def _claim_triangles(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    for n in range(1, limit + 1):
        g = build(n)
        present = has_triangle(g) is not None
        if present != (n >= 4):
            return (f"n <= {limit}", Status.FAIL, f"triangle presence wrong at n={n}")
        if n <= 30:  # independent brute scan on the small range
            brute = any(
                _ring_pair(n, a, b) and _ring_pair(n, b, c) and _ring_pair(n, a, c)
                for a, b, c in combinations(range(n), 3)
            )
            if brute != present:
                return (f"n <= {limit}", Status.FAIL, f"brute triangle scan differs at n={n}")
    return (f"n <= {limit}", Status.PASS, "triangles exist exactly for n >= 4")


def _claim_traceable(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    for n in range(2, limit + 1):
        hamiltonian_path(build(n))  # validates (0, 1, ..., n-1) edge by edge
    return (f"n <= {limit}", Status.PASS, "canonical path (0,...,n-1) valid in every graph")


def _claim_hamiltonian_even(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    for n in range(4, limit + 1, 2):
        res = hamiltonian_cycle(build(n))
        if res.cycle is None:
            return (f"even n <= {limit}", Status.FAIL, f"no constructive cycle at n={n}")
        if n <= oracle.MAX_CYCLE_N:
            found, _ = oracle.exhaustive_hamiltonian(build(n))
            if found is None:
                return (f"even n <= {limit}", Status.FAIL, f"oracle finds no cycle at n={n}")
    return (f"even n <= {limit}", Status.PASS, "constructive Hamiltonian cycle validates")


def _claim_longest_cycle_odd(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    limit = min(limit, oracle.MAX_CYCLE_N)
    for n in range(5, limit + 1, 2):
        g = build(n)
        longest_cycle_constructive(g)  # validates the (1,...,n-1) cycle
        ham, longest = oracle.exhaustive_hamiltonian(g)
        if ham is not None:
            return (f"odd 5 <= n <= {limit}", Status.FAIL, f"unexpected Hamiltonian cycle at n={n}")
        if longest != n - 1:
            return (
                f"odd 5 <= n <= {limit}",
                Status.FAIL,
                f"longest cycle {longest} != {n - 1} at n={n}",
            )
    return (
        f"odd 5 <= n <= {limit}",
        Status.PASS,
        "no Hamiltonian cycle and maximum cycle order n-1",
    )


# --- cliques, planarity, coloring -------------------------------------------------

_TWO_PRIME_PRODUCTS = (6, 10, 14, 15, 21, 22, 26, 33)


def _two_prime_parameters(n: int) -> tuple[int, int, int, int]:
    """(p, q, m, k) for n = pq: m primes below pq other than p and q, and the
    largest k with p^k < pq."""
    p, q = [r for r in primes_below(n) if n % r == 0]
    m = len(primes_below(n)) - 2
    k = 1
    while p ** (k + 1) < n:
        k += 1
    return p, q, m, k


def _is_ring_clique(n: int, vertices: list[int]) -> bool:
    return all(_ring_pair(n, a, b) for a, b in combinations(vertices, 2))


def _observed_omega(n: int, bounds: SearchBounds) -> int:
    g = build(n)
    size = len(max_clique(g, bounds).vertices)
    if n <= oracle.MAX_CLIQUE_N:
        oracle_size = len(oracle.exhaustive_max_clique(g).vertices)
        if oracle_size != size:
            raise AssertionError(f"clique search disagrees with oracle at n={n}")
    return size


def _claim_clique_two_prime(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    rows = []
    bad = False
    for n in [v for v in _TWO_PRIME_PRODUCTS if v <= limit]:
        p, q, m, k = _two_prime_parameters(n)
        claimed = m + k + 2
        claimed_set = sorted({1, *primes_below(n), *(p**j for j in range(2, k + 1))})
        valid = _is_ring_clique(n, claimed_set)
        maximal = valid and not any(
            _is_ring_clique(n, claimed_set + [v]) for v in range(n) if v not in claimed_set
        )
        observed = _observed_omega(n, bounds)
        constructed = len(clique_construction(n).vertices)
        if valid and maximal and len(claimed_set) == claimed and observed >= claimed:
            rows.append(f"n={n}: maximal order {claimed} confirmed")
        else:
            bad = True
            rows.append(
                f"n={n}: claimed {claimed}, advertised set "
                f"{'valid' if valid else 'not pairwise adjacent'}, "
                f"largest valid construction {constructed}, observed maximum {observed}"
            )
    status = Status.DISCREPANCY if bad else Status.PASS
    return (f"n in {list(v for v in _TWO_PRIME_PRODUCTS if v <= limit)}", status, "; ".join(rows))


def _prime_power_clique_order(pp: PrimePower) -> int:
    """m + k with m = primes below p^k other than p (k + 1 = 2 when n = 2)."""
    if pp.value == 2:
        return 2
    m = len([r for r in primes_below(pp.value) if r != pp.p])
    return m + pp.k


def _claim_clique_prime_power(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    checked = 0
    for pp in _prime_powers_upto(limit):
        n = pp.value
        expected = _prime_power_clique_order(pp)
        witness = clique_construction(n)
        if len(witness.vertices) != expected or not witness.maximal:
            return (
                f"p^k <= {limit}",
                Status.FAIL,
                f"construction order {len(witness.vertices)} (maximal={witness.maximal}) "
                f"!= {expected} at n={n}",
            )
        if _observed_omega(n, bounds) < expected:
            return (f"p^k <= {limit}", Status.FAIL, f"maximum clique below {expected} at n={n}")
        checked += 1
    return (f"p^k <= {limit}", Status.PASS, f"{checked} prime powers give maximal order m+k")


def _claim_clique_prime_count(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    for n in range(2, limit + 1):
        base = [1, *primes_below(n)]
        if not _is_ring_clique(n, base):
            return (f"n <= {limit}", Status.FAIL, f"1 + primes not a clique at n={n}")
        if _observed_omega(n, bounds) < len(base):
            return (f"n <= {limit}", Status.FAIL, f"maximum clique below {len(base)} at n={n}")
    return (f"n <= {limit}", Status.PASS, "clique on 1 and the primes below n everywhere")


def _has_k5(n: int) -> bool:
    # independent detection: the witness {1,2,3,5,7} for n >= 8, {1,...,5} for
    # n = 6, exhaustive scan below that
    if n >= 8:
        return _is_ring_clique(n, [1, 2, 3, 5, 7])
    return any(_is_ring_clique(n, list(c)) for c in combinations(range(n), 5))


def _claim_k5(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    for n in range(2, limit + 1):
        if _has_k5(n) != (n >= 6 and n != 7):
            return (f"n <= {limit}", Status.FAIL, f"K5 presence wrong at n={n}")
    return (f"n <= {limit}", Status.PASS, "K5 exists exactly for n >= 6, n != 7")


def _claim_planarity(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    for n in range(2, limit + 1):
        g = build(n)
        planar = is_planar(g)
        if planar != (n <= 7 and n != 6):
            return (f"n <= {limit}", Status.FAIL, f"planarity wrong at n={n}")
        edges = len(g.simple_edges)
        if n >= 3 and edges > 3 * n - 6 and planar:
            return (f"n <= {limit}", Status.FAIL, f"planar verdict violates edge bound at n={n}")
        if _has_k5(n) and planar:
            return (f"n <= {limit}", Status.FAIL, f"planar verdict despite K5 at n={n}")
    return (f"n <= {limit}", Status.PASS, "planar exactly for n <= 7, n != 6")


_SMALL_CHROMATIC = {2: 2, 3: 2, 4: 3, 5: 3, 6: 5, 7: 4}


def _claim_chromatic_small(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    span = "2 <= n <= 7"
    for n, expected in _SMALL_CHROMATIC.items():
        if n > limit:
            continue
        g = build(n)
        exact = chromatic_number(g, bounds).color_count
        if exact != expected:
            return (span, Status.FAIL, f"chromatic {exact} != {expected} at n={n}")
        if oracle.exhaustive_chromatic(g) != expected:
            return (span, Status.FAIL, f"oracle chromatic differs at n={n}")
    return (span, Status.PASS, "chromatic numbers 2,2,3,3,5,4 confirmed")


def _claim_chromatic_two_prime(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    rows = []
    bad = False
    tested = []
    for n in _TWO_PRIME_PRODUCTS:
        if n > min(limit, bounds.chromatic_exact):
            continue
        tested.append(n)
        _, _, m, k = _two_prime_parameters(n)
        claimed = m + k + 2
        actual = chromatic_number(build(n), bounds).color_count
        if actual >= claimed:
            rows.append(f"n={n}: chromatic {actual} >= {claimed}")
        else:
            bad = True
            rows.append(f"n={n}: claimed lower bound {claimed} exceeds chromatic {actual}")
    status = Status.DISCREPANCY if bad else Status.PASS
    return (f"n in {tested}", status, "; ".join(rows))


def _claim_chromatic_prime_bounds(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    cap = min(limit, bounds.chromatic_exact)
    for pp in _prime_powers_upto(cap):
        n = pp.value
        bound = _prime_power_clique_order(pp)
        actual = chromatic_number(build(n), bounds).color_count
        if actual < bound:
            return (f"n <= {cap}", Status.FAIL, f"chromatic {actual} below m+k={bound} at n={n}")
    for n in range(2, min(cap, oracle.MAX_CHROMATIC_N) + 1):
        bound = len(primes_below(n)) + 1
        actual = oracle.exhaustive_chromatic(build(n))
        if actual < bound:
            return (f"n <= {cap}", Status.FAIL, f"chromatic {actual} below m+1={bound} at n={n}")
    return (f"n <= {cap}", Status.PASS, "prime-power and prime-count lower bounds hold")


# --- errata -------------------------------------------------------------------


def _claim_errata_z8(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    actual = sorted(classify_elements(8).zero_divisors)
    if actual != [2, 4, 6]:
        return ("n = 8", Status.FAIL, f"zero divisors of Z_8 computed as {actual}")
    return (
        "n = 8",
        Status.NOTED,
        "zero divisors of Z_8 are {2,4,6}; the worked example's set {2,3,6} is a typo "
        "(3 is a unit mod 8; the example's own pair list uses 4)",
    )


def _claim_errata_u9(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    actual = sorted(classify_elements(9).units)
    if actual != [1, 2, 4, 5, 7, 8]:
        return ("n = 9", Status.FAIL, f"units of Z_9 computed as {actual}")
    return (
        "n = 9",
        Status.NOTED,
        "units of Z_9 are {1,2,4,5,7,8}; the stated variant includes 0, which is never a unit",
    )


def _claim_errata_n3_cycle(limit: int, bounds: SearchBounds) -> tuple[str, Status, str]:
    _, longest = oracle.exhaustive_hamiltonian(build(3))
    if longest != 0:
        return ("n = 3", Status.FAIL, f"G_3 unexpectedly contains a cycle of order {longest}")
    return (
        "n = 3",
        Status.NOTED,
        "the odd-case maximal cycle of order n-1 degenerates at n=3 (order 2 is not a "
        "cycle); the claim applies for odd n >= 5",
    )


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    statement: str
    default_limit: int
    runner: Callable[[int, SearchBounds], tuple[str, Status, str]]


CLAIMS: tuple[ClaimSpec, ...] = (
    ClaimSpec(
        "pair-when-divisor",
        "if a divides n then {a, b} is a gcd-pair for every b",
        200,
        _claim_pair_when_divisor,
    ),
    ClaimSpec(
        "unit-pairs-coprime",
        "a gcd-pair containing a unit has coprime members",
        200,
        _claim_unit_pairs_coprime,
    ),
    ClaimSpec(
        "prime-power-count",
        "pair count of Z_{p^k} equals k + nested totient sums",
        500,
        _claim_prime_power_count,
    ),
    ClaimSpec(
        "composite-count-bound",
        "composite n: pair count strictly exceeds 1 + sum phi(1..n-1)",
        500,
        _claim_composite_bound,
    ),
    ClaimSpec(
        "zero-divisor-partition",
        "the cells S'_d partition the zero divisors",
        500,
        _claim_partition,
    ),
    ClaimSpec(
        "zero-divisor-pair-bound",
        "zero-divisor pairs dominate the sum of unit-restricted counts over divisors",
        500,
        _claim_cell_sum_bound,
    ),
    ClaimSpec(
        "semiprime-zero-divisor-bound",
        "for distinct primes: zero-divisor pairs >= |pairs(Z_p)| + |pairs(Z_q)| + p + q - 5",
        500,
        _claim_semiprime_bound,
    ),
    ClaimSpec(
        "double-prime-zero-divisors",
        "n = 2p, p odd: zero-divisor pairs = |pairs(Z_p)| + p - 1 exactly",
        500,
        _claim_double_prime,
    ),
    ClaimSpec(
        "triple-prime-zero-divisors",
        "n = 3p, p != 3: zero-divisor pairs = |pairs(Z_p)| + p + ceil((p-1)/2) exactly",
        500,
        _claim_triple_prime,
    ),
    ClaimSpec(
        "prime-power-zero-divisors",
        "n = p^k: zero-divisor pairs = |pairs(Z_{p^(k-1)})| - k + 1 (0 for primes)",
        500,
        _claim_prime_power_zero_divisors,
    ),
    ClaimSpec(
        "subgraph-embedding",
        "G_m embeds identically in G_n whenever m divides n",
        200,
        _claim_embedding,
    ),
    ClaimSpec(
        "star-subgraph",
        "a maximal star of order n centers at vertex 1",
        200,
        _claim_star,
    ),
    ClaimSpec(
        "domination-number",
        "the domination number is 1",
        200,
        _claim_domination,
    ),
    ClaimSpec(
        "connectivity",
        "G_n is connected",
        200,
        _claim_connectivity,
    ),
    ClaimSpec(
        "triangle-threshold",
        "triangles exist exactly for n >= 4",
        200,
        _claim_triangles,
    ),
    ClaimSpec(
        "traceable",
        "(0, 1, ..., n-1) is a Hamiltonian path",
        200,
        _claim_traceable,
    ),
    ClaimSpec(
        "hamiltonian-even",
        "even n > 2: (0, 2, 3, ..., n-1, 1) is a Hamiltonian cycle",
        200,
        _claim_hamiltonian_even,
    ),
    ClaimSpec(
        "longest-cycle-odd",
        "odd n: no Hamiltonian cycle; maximum cycle order is n - 1",
        15,
        _claim_longest_cycle_odd,
    ),
    ClaimSpec(
        "clique-two-prime-product",
        "n = pq: a maximal clique of order m+k+2 (suspect for q > p^2)",
        33,
        _claim_clique_two_prime,
    ),
    ClaimSpec(
        "clique-prime-power",
        "n = p^k: a maximal clique of order m+k (k+1 when n = 2)",
        40,
        _claim_clique_prime_power,
    ),
    ClaimSpec(
        "clique-prime-count",
        "1 together with the primes below n is a clique of order m+1",
        40,
        _claim_clique_prime_count,
    ),
    ClaimSpec(
        "k5-threshold",
        "a K5 subgraph exists exactly for n >= 6, n != 7",
        60,
        _claim_k5,
    ),
    ClaimSpec(
        "planarity-threshold",
        "G_n is planar exactly for n <= 7, n != 6",
        30,
        _claim_planarity,
    ),
    ClaimSpec(
        "chromatic-small",
        "chromatic numbers of G_2..G_7 are 2, 2, 3, 3, 5, 4",
        7,
        _claim_chromatic_small,
    ),
    ClaimSpec(
        "chromatic-two-prime-bound",
        "n = pq: chromatic number >= m+k+2 (inherits the suspect clique order)",
        33,
        _claim_chromatic_two_prime,
    ),
    ClaimSpec(
        "chromatic-prime-bounds",
        "chromatic number >= m+k for n = p^k and >= m+1 in general",
        16,
        _claim_chromatic_prime_bounds,
    ),
    ClaimSpec(
        "errata-zero-divisors-mod-8",
        "documented typo: the zero divisors of Z_8",
        8,
        _claim_errata_z8,
    ),
    ClaimSpec(
        "errata-units-mod-9",
        "documented typo: the units of Z_9",
        9,
        _claim_errata_u9,
    ),
    ClaimSpec(
        "errata-odd-cycle-small",
        "edge case: the odd maximal-cycle claim at n = 3",
        3,
        _claim_errata_n3_cycle,
    ),
)


def run_verification(
    max_n: int | None = None,
    claims: list[str] | None = None,
    bounds: SearchBounds = DEFAULT_BOUNDS,
) -> VerificationReport:
    """Run every claim (or the ones whose id contains a requested substring),
    optionally capping enumeration ranges at max_n."""
    entries = []
    for spec in CLAIMS:
        if claims and not any(f in spec.claim_id for f in claims):
            continue
        limit = spec.default_limit if max_n is None else min(spec.default_limit, max_n)
        range_tested, status, details = spec.runner(limit, bounds)
        entries.append(
            ClaimResult(
                claim_id=spec.claim_id,
                statement=spec.statement,
                range_tested=range_tested,
                status=status,
                details=details,
            )
        )
    return VerificationReport(entries=entries)
