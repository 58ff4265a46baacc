"""Number-theory primitives against brute force and worked examples."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcdpairs.numtheory import (
    PrimePower,
    divisors,
    euler_phi,
    gcd,
    is_prime,
    nontrivial_divisors,
    phi_partial_sum,
    phi_sieve,
    prime_power_decompose,
    primes_below,
)


def test_gcd_examples():
    assert gcd(2, 4) == 2
    assert gcd(0, 0) == 0
    assert gcd(9, 15) == 3


def test_gcd_brute_force_agreement():
    for a in range(0, 40):
        for b in range(0, 40):
            common = [d for d in range(1, max(a, b) + 1) if a % d == 0 and b % d == 0]
            expected = max(common) if common else 0
            assert gcd(a, b) == expected


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_gcd_properties(a, b):
    g = gcd(a, b)
    assert g == gcd(b, a)
    if g > 0:
        assert a % g == 0 and b % g == 0
    assert gcd(a, 0) == a


def test_euler_phi_examples():
    assert euler_phi(8) == 4
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4


def test_euler_phi_rejects_zero():
    with pytest.raises(ValueError):
        euler_phi(0)


@given(st.integers(1, 2000))
def test_euler_phi_counts_coprimes(m):
    assert euler_phi(m) == sum(1 for j in range(1, m + 1) if math.gcd(j, m) == 1)


def test_phi_sieve_matches_single_queries():
    sieve = phi_sieve(3000)
    for m in range(1, 3001):
        assert sieve[m] == euler_phi(m)


def test_phi_partial_sum_examples():
    assert phi_partial_sum(5) == 10
    assert phi_partial_sum(0) == 0
    assert phi_partial_sum(8) == 22


@given(st.integers(1, 500))
def test_phi_partial_sum_increments(n):
    assert phi_partial_sum(n) - phi_partial_sum(n - 1) == euler_phi(n)


def test_nontrivial_divisors_examples():
    assert nontrivial_divisors(6) == [2, 3, 6]
    assert nontrivial_divisors(15) == [3, 5, 15]
    assert nontrivial_divisors(8) == [2, 4, 8]
    with pytest.raises(ValueError):
        nontrivial_divisors(1)


@given(st.integers(2, 3000))
def test_nontrivial_divisors_by_trial_division(n):
    assert nontrivial_divisors(n) == [d for d in range(2, n + 1) if n % d == 0]


def test_primes_below_examples():
    assert primes_below(6) == [2, 3, 5]
    assert primes_below(8) == [2, 3, 5, 7]
    assert primes_below(2) == []


def test_primes_below_against_is_prime():
    assert primes_below(500) == [p for p in range(2, 500) if is_prime(p)]


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}
    for n in range(31):
        assert is_prime(n) == (n in primes)


def test_prime_power_decompose_examples():
    assert prime_power_decompose(9) == PrimePower(3, 2)
    assert prime_power_decompose(6) is None
    assert prime_power_decompose(8) == PrimePower(2, 3)


@given(st.integers(2, 5000))
def test_prime_power_decompose_iff_single_prime_factor(n):
    distinct = {p for p in range(2, n + 1) if n % p == 0 and is_prime(p)}
    result = prime_power_decompose(n)
    if len(distinct) == 1:
        assert result is not None
        assert result.p == min(distinct)
        assert result.p**result.k == n
    else:
        assert result is None


def test_prime_power_validates():
    with pytest.raises(ValueError):
        PrimePower(4, 2)
    with pytest.raises(ValueError):
        PrimePower(3, 0)


def test_divisors_include_endpoints():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
