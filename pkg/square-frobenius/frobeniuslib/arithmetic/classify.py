"""Minimum part counts over squares (iota) and over primes and 1 (tau)."""

import itertools
from functools import lru_cache
from math import isqrt

import numpy as np

from .constants import CLASSIFY_CACHE_SIZE, TAU_LIMIT
from .primes import check_range, factorize, is_prime, sieve_primes
from ..errors import DomainError, InvariantViolation


def _check_positive(n: int):
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    check_range(n)


def is_sum_two_squares(n: int) -> bool:
    """Every prime factor p = 3 (mod 4) appears with an even exponent."""
    _check_positive(n)
    if is_prime(n):
        return n % 4 != 3
    return all(e % 2 == 0 for p, e in factorize(n).factors if p % 4 == 3)


def is_sum_three_squares(n: int) -> bool:
    """n is not of the form 4^r (8t + 7)."""
    _check_positive(n)
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


@lru_cache(maxsize=CLASSIFY_CACHE_SIZE)
def iota(n: int) -> int:
    """Minimum number of positive squares summing to n."""
    _check_positive(n)
    if isqrt(n) ** 2 == n:
        return 1
    if not is_sum_three_squares(n):
        return 4
    if is_sum_two_squares(n):
        return 2
    return 3


def _squares(n: int, count: int) -> tuple:
    if count == 1:
        return (isqrt(n),)
    for base in range(isqrt(n), 0, -1):
        rest = n - base * base
        if rest > 0 and iota(rest) == count - 1:
            return (base,) + _squares(rest, count - 1)
    raise InvariantViolation(f"No sum of {count} squares found for {n}")


def square_decomposition(n: int) -> tuple:
    """Bases b_1 >= b_2 >= ... with iota(n) terms and sum of squares n, largest first base first."""
    return _squares(n, iota(n))


def _two_parts(n: int):
    """(p, n - p) with both parts prime and p smallest, else (1, n - 1) when n - 1 is prime or 1."""
    if n < 2:
        return None
    table = sieve_primes(n)
    candidates = np.flatnonzero(table[: n // 2 + 1])
    hits = np.flatnonzero(table[n - candidates])
    if hits.size:
        p = int(candidates[hits[0]])
        return (p, n - p)
    if n == 2 or table[n - 1]:
        return (1, n - 1)
    return None


@lru_cache(maxsize=CLASSIFY_CACHE_SIZE)
def prime_decomposition(n: int) -> tuple:
    """Ascending parts from PN u {1} summing to n, tau(n) of them.

    Found by direct search; the strong Goldbach conjecture is never assumed.
    """
    _check_positive(n)
    if n > TAU_LIMIT:
        raise DomainError(f"tau is only computed up to {TAU_LIMIT}, got n={n}")
    if n == 1 or is_prime(n):
        return (n,)
    pair = _two_parts(n)
    if pair is not None:
        return pair
    table = sieve_primes(n)
    for p in itertools.chain(np.flatnonzero(table[:n]), (1,)):
        rest = _two_parts(n - int(p))
        if rest is not None:
            return tuple(sorted((int(p),) + rest))
    raise InvariantViolation(f"Goldbach-type failure: {n} is not a sum of at most three elements of PN u {{1}}")


def tau(n: int) -> int:
    """Minimum number of parts from the primes and 1 summing to n."""
    return len(prime_decomposition(n))
