from math import isqrt
import unittest

import pytest

from .. import primes
from ...errors import DomainError, IntegerRangeError, ResourceError


def test_factorize():
    assert primes.factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    assert primes.factorize(97).factors == ((97, 1),)
    assert primes.factorize(1).factors == ()
    assert primes.factorize(2**10 * 7**3 * 1009).value() == 2**10 * 7**3 * 1009


def test_factorize_zero():
    with pytest.raises(DomainError):
        primes.factorize(0)


def test_is_prime_small():
    naive = [n for n in range(2000) if n > 1 and all(n % d for d in range(2, isqrt(n) + 1))]
    assert [n for n in range(2000) if primes.is_prime(n)] == naive


def test_is_prime_large():
    assert primes.is_prime(2**61 - 1)
    assert not primes.is_prime(2**61 + 1)
    assert not primes.is_prime(1_000_000_007 * 998_244_353)


def test_prime_count():
    assert primes.prime_count(1) == 0
    assert primes.prime_count(2) == 1
    assert primes.prime_count(100) == 25
    assert primes.prime_count(1000) == 168


def test_sieve_is_read_only():
    table = primes.sieve_primes(100)
    assert not table.flags.writeable
    assert len(table) > 100


def test_sieve_limit():
    with pytest.raises(ResourceError):
        primes.sieve_primes(primes.SIEVE_LIMIT + 1)


def test_check_range():
    with pytest.raises(DomainError):
        primes.check_range(-1)
    with pytest.raises(IntegerRangeError):
        primes.check_range(2**63)
    primes.check_range(2**63 - 1)


def test_factorize_large_prime():
    assert primes.factorize(2**61 - 1).factors == ((2**61 - 1, 1),)
    assert primes.factorize(3 * (2**61 - 1)).factors == ((3, 1), (2**61 - 1, 1))


def test_factorize_gives_up_on_large_semiprime():
    with pytest.raises(ResourceError):
        primes.factorize(1_000_000_007 * 998_244_353)


def test_is_prime_at_the_range_handoff():
    assert primes.is_prime(2467)
    assert not primes.is_prime(2469)


class TestFactorizeRoundTrip(unittest.TestCase):
    def setUp(self):
        self.limit = 10**6
        self.table = primes.sieve_primes(self.limit)

    def test_round_trip(self):
        for n in range(1, self.limit + 1):
            result = primes.factorize(n)
            self.assertEqual(result.value(), n)
            bases = [p for p, _ in result.factors]
            self.assertEqual(bases, sorted(set(bases)))
            self.assertTrue(all(self.table[p] for p in bases), n)
