"""Elementary number theory backing the pair-counting formulas.

Everything here works on plain nonnegative Python ints (desk scale; trial
division only, no probabilistic primality). The one convention that matters
downstream: gcd(0, 0) == 0, and 0 divides no positive modulus, so the pair
{0, 0} is never a gcd-pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, with gcd(0, 0) == 0."""
    return math.gcd(a, b)


def is_prime(n: int) -> bool:
    """Trial division with a 2/3 wheel; enough for 64-bit desk-scale inputs."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@dataclass(frozen=True)
class PrimePower:
    """n = p**k for a prime p and exponent k >= 1."""

    p: int
    k: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.k < 1:
            raise ValueError(f"k={self.k} must be >= 1")

    @property
    def value(self) -> int:
        return self.p**self.k


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    """Count of 1 <= j <= m coprime to m, by trial-division factorization."""
    if m < 1:
        raise ValueError(f"euler_phi requires m >= 1, got {m}")
    result = m
    rest = m
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            result -= result // f
            while rest % f == 0:
                rest //= f
        f += 1
    if rest > 1:
        result -= result // rest
    return result


def phi_partial_sum(limit: int) -> int:
    """Summatory totient: sum of euler_phi(j) for 1 <= j <= limit (0 for limit <= 0)."""
    if limit < 0:
        raise ValueError(f"phi_partial_sum requires limit >= 0, got {limit}")
    return sum(euler_phi(j) for j in range(1, limit + 1))


def phi_sieve(limit: int) -> list[int]:
    """phi values for 0..limit in one sieve pass; the verify harness's bulk path.

    Must agree with euler_phi everywhere (tested).
    """
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p untouched so far, hence prime
            for multiple in range(p, limit + 1, p):
                phi[multiple] -= phi[multiple] // p
    return phi


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f != n // f:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def nontrivial_divisors(n: int) -> list[int]:
    """Divisors of n except 1, ascending; includes n itself. Requires n >= 2."""
    if n < 2:
        raise ValueError(f"nontrivial_divisors requires n >= 2, got {n}")
    return divisors(n)[1:]


def primes_below(x: int) -> list[int]:
    """Ascending primes strictly below x."""
    if x <= 2:
        return []
    sieve = bytearray([1]) * x
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(x - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, x, p)))
    return [p for p in range(2, x) if sieve[p]]


def prime_power_decompose(n: int) -> PrimePower | None:
    """(p, k) with p**k == n when n >= 2 is a prime power, else None."""
    if n < 2:
        raise ValueError(f"prime_power_decompose requires n >= 2, got {n}")
    rest = n
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            k = 0
            while rest % f == 0:
                rest //= f
                k += 1
            return PrimePower(f, k) if rest == 1 else None
        f += 1
    return PrimePower(rest, 1)  # n itself is prime
