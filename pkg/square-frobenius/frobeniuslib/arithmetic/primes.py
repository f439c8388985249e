import logging
import threading
from dataclasses import dataclass
from math import isqrt, prod

import numpy as np

from .constants import INITIAL_SIEVE_SIZE, INT64_MAX, MILLER_RABIN_BASES, SIEVE_LIMIT, TRIAL_DIVISION_LIMIT
from ..errors import DomainError, IntegerRangeError, ResourceError

logger = logging.getLogger(__name__)

# Published sieves are read-only and replaced wholesale, so readers never see a partial table
_sieve = np.zeros(0, dtype=bool)
_sieve_lock = threading.Lock()


@dataclass(frozen=True)
class Factorization:
    """Standard form of n: ascending (prime, exponent) pairs. n = 1 has no factors."""

    n: int
    factors: tuple

    def value(self) -> int:
        return prod(p**e for p, e in self.factors)


def check_range(n: int, name: str = "n"):
    if n < 0:
        raise DomainError(f"{name} must be nonnegative, got {n}")
    if n > INT64_MAX:
        raise IntegerRangeError(f"{name}={n} exceeds the supported 64-bit range")


def _build_sieve(size: int) -> np.ndarray:
    table = np.ones(size, dtype=bool)
    table[:2] = False
    for p in range(2, isqrt(size - 1) + 1):
        if table[p]:
            table[p * p :: p] = False  # noqa: E203
    table.setflags(write=False)
    return table


def sieve_primes(limit: int) -> np.ndarray:
    """Membership table of the primes in 0..limit (possibly longer), shared and read-only."""
    global _sieve
    table = _sieve
    if len(table) > limit:
        return table
    if limit > SIEVE_LIMIT:
        raise ResourceError(f"Sieve up to {limit} exceeds the configured limit of {SIEVE_LIMIT}")
    with _sieve_lock:
        if len(_sieve) <= limit:
            size = min(max(limit + 1, 2 * len(_sieve), INITIAL_SIEVE_SIZE), SIEVE_LIMIT + 1)
            logger.debug(f"Growing prime sieve to {size} entries")
            _sieve = _build_sieve(size)
        return _sieve


def _miller_rabin(n: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in MILLER_RABIN_BASES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    check_range(n)
    table = _sieve
    if n < len(table):
        return bool(table[n])
    if n < 2:
        return False
    for p in MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    return _miller_rabin(n)


def prime_count(x: int) -> int:
    """pi(x), the number of primes <= x."""
    check_range(x, "x")
    if x < 2:
        return 0
    return int(np.count_nonzero(sieve_primes(x)[: x + 1]))


def _strip(n: int, p: int):
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return n, count


def factorize(n: int) -> Factorization:
    """Trial division on the 6k +/- 1 wheel, stopping as soon as the cofactor is prime.

    Raises ResourceError when a composite cofactor survives division by every candidate up to
    TRIAL_DIVISION_LIMIT.
    """
    if n == 0:
        raise DomainError("Cannot factorize 0")
    check_range(n)
    original, factors = n, []
    for p in (2, 3):
        n, e = _strip(n, p)
        if e:
            factors.append((p, e))
    done = n == 1 or is_prime(n)
    i = 5
    while not done and i * i <= n:
        if i > TRIAL_DIVISION_LIMIT:
            raise ResourceError(
                f"factorize({original}) left the composite cofactor {n} after trial division up to "
                f"{TRIAL_DIVISION_LIMIT}"
            )
        for p in (i, i + 2):
            n, e = _strip(n, p)
            if e:
                factors.append((p, e))
                done = n == 1 or is_prime(n)
        i += 6
    if n > 1:
        factors.append((n, 1))
    return Factorization(n=original, factors=tuple(factors))
