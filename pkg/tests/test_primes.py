import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from circdom.primes import distinct_prime_divisors, primes_in_window


def test_window_all_divide_n():
    assert primes_in_window(1, 6).primes == ()


def test_window_small():
    assert primes_in_window(3, 101).primes == (5,)
    assert primes_in_window(10, 101).primes == (11, 13, 17, 19)


def test_window_drops_divisors_of_n():
    # 11 divides n, so it must vanish from [11, 20]
    assert primes_in_window(10, 11 * 7).primes == (13, 17, 19)


@given(st.integers(min_value=1, max_value=3000), st.integers(2, 10**6))
@settings(max_examples=60)
def test_window_matches_sympy(L, n):
    got = primes_in_window(L, n).primes
    expected = tuple(
        p for p in sympy.primerange(L + 1, 2 * L + 1) if math.gcd(p, n) == 1
    )
    assert got == expected
    assert all(sympy.isprime(p) for p in got)  # independent re-check
    assert list(got) == sorted(set(got))


@pytest.mark.parametrize("L", [100, 250, 1000, 5000])
@pytest.mark.parametrize("n", [101, 2 * 3 * 5 * 7 * 11, 10**6])
def test_window_pnt_sanity_band(L, n):
    count = len(primes_in_window(L, n))
    omega = distinct_prime_divisors(n)
    assert count >= 0.5 * L / math.log(2 * L) - omega


def test_distinct_prime_divisors():
    assert distinct_prime_divisors(101) == 1
    assert distinct_prime_divisors(12) == 2
    assert distinct_prime_divisors(210) == 4
    assert distinct_prime_divisors(2**20) == 1


@given(st.integers(min_value=2, max_value=10**6))
@settings(max_examples=60)
def test_omega_matches_sympy(n):
    assert distinct_prime_divisors(n) == len(sympy.primefactors(n))
