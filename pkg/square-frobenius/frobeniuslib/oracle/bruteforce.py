"""Naive ground truth for the tests.

Nothing here imports the arithmetic, minplus, finite or infinite modules; every answer is found
by exhaustive dynamic programming over the generators.
"""

from functools import reduce
from itertools import combinations
from math import gcd, isqrt

from .constants import ORACLE_LIMIT
from ..errors import DomainError, ResourceError


def _check_budget(limit: int):
    if limit > ORACLE_LIMIT:
        raise ResourceError(f"Oracle table of size {limit} exceeds the desk-scale budget of {ORACLE_LIMIT}")


def _check_positive(n: int):
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")


def sylvester(a1: int, a2: int) -> int:
    """g(a1, a2) = a1*a2 - a1 - a2 for coprime a1, a2."""
    return a1 * a2 - a1 - a2


def _naive_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def min_parts_table(parts, limit: int) -> list:
    """best[n] = fewest parts (with repetition) summing to n, or None when n is unreachable."""
    _check_budget(limit)
    parts = sorted(set(parts))
    best = [None] * (limit + 1)
    best[0] = 0
    for n in range(1, limit + 1):
        counts = []
        for p in parts:
            if p > n:
                break
            if best[n - p] is not None:
                counts.append(best[n - p])
        best[n] = min(counts) + 1 if counts else None
    return best


def iota_bruteforce_table(limit: int) -> list:
    return min_parts_table([i * i for i in range(1, isqrt(limit) + 1)], limit)


def iota_k_bruteforce_table(k: int, limit: int) -> list:
    return min_parts_table([i * i for i in range(1, k + 1)], limit)


def tau_bruteforce_table(limit: int) -> list:
    return min_parts_table([1] + [p for p in range(2, limit + 1) if _naive_is_prime(p)], limit)


def iota_bruteforce(n: int) -> int:
    _check_positive(n)
    return iota_bruteforce_table(n)[n]


def iota_k_bruteforce(k: int, n: int) -> int:
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if n == 0:
        return 0
    _check_positive(n)
    return iota_k_bruteforce_table(k, n)[n]


def tau_bruteforce(n: int) -> int:
    _check_positive(n)
    return tau_bruteforce_table(n)[n]


def _representability_bound(generators: list) -> int:
    """Every integer above this bound is representable."""
    pairs = [(x, y) for x, y in combinations(generators, 2) if gcd(x, y) == 1]
    if pairs:
        return min(sylvester(x, y) for x, y in pairs)
    # Schur's bound
    return (generators[0] - 1) * (generators[-1] - 1) - 1


def frobenius_dp(generators) -> int:
    """Largest integer that is not a nonnegative combination of the generators, by reachability DP.

    Returns -1 when every nonnegative integer is representable (1 is a generator).
    """
    generators = sorted(set(generators))
    if not generators:
        raise DomainError("The generator set is empty")
    if generators[0] < 1:
        raise DomainError(f"Generators must be positive, got {generators}")
    if reduce(gcd, generators) != 1:
        raise DomainError(f"Generators {generators} are not coprime")
    if generators[0] == 1:
        return -1

    bound = _representability_bound(generators)
    _check_budget(bound)
    reachable = [False] * (bound + 1)
    reachable[0] = True
    for n in range(1, bound + 1):
        reachable[n] = any(reachable[n - x] for x in generators if x <= n)
    return max(n for n in range(bound + 1) if not reachable[n])
