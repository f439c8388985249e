"""Min-plus shadows of the generating function prod_i 1/(1 - t q^(i^2)).

A series keeps, for each power q^n up to the truncation M, only the minimum t-degree among its
terms. Since the minimum-degree selection commutes with products, the selected coefficients of
f_{i-1} * sum_{n<=h_i} t^n q^(i^2 n) depend only on the selected coefficients of f_{i-1}.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .constants import MAX_TABLE_ENTRIES, UNREACHABLE
from ..errors import DomainError, ResourceError

logger = logging.getLogger(__name__)


def ceil_three_halves(k: int) -> int:
    """ceil(3k/2)"""
    return (3 * k + 1) // 2


def minimal_truncation(k: int) -> int:
    """(ceil(3k/2) - 1) k^2: the window that determines iota_k everywhere."""
    return (ceil_three_halves(k) - 1) * k * k


def stability_bound(k: int) -> int:
    """(ceil(3k/2) - 2) k^2: iota_k(r + k^2) = iota_k(r) + 1 for every r at or above it."""
    return (ceil_three_halves(k) - 2) * k * k


@dataclass(frozen=True)
class CapVector:
    """Upper bounds h_1..h_k on how often i^2 appears in an optimal representation."""

    k: int
    h: tuple

    def rounds(self, i: int, truncation: int) -> int:
        """Relaxation rounds for the square i^2 in a table truncated at q^truncation."""
        limit = truncation // (i * i)
        if i == self.k:
            # h_k only holds on the minimal window, where it equals the limit
            return limit
        return min(self.h[i - 1], limit)


def caps(k: int) -> CapVector:
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    h = []
    for i in range(1, k + 1):
        if i == k:
            h.append(ceil_three_halves(k) - 1)
        elif i <= k // 2:
            # four copies of i^2 are one (2i)^2
            h.append(3)
        else:
            h.append((4 * k * k) // (k * k - i * i))
    return CapVector(k=k, h=tuple(h))


@dataclass(frozen=True, eq=False)
class MinPlusSeries:
    truncation: int
    coeff: np.ndarray

    @classmethod
    def one(cls, truncation: int) -> "MinPlusSeries":
        coeff = np.full(truncation + 1, UNREACHABLE, dtype=np.int64)
        coeff[0] = 0
        coeff.setflags(write=False)
        return cls(truncation=truncation, coeff=coeff)

    def degree(self, n: int):
        """Minimum t-degree of the q^n coefficient, or None when it is zero."""
        value = int(self.coeff[n])
        return None if value == UNREACHABLE else value

    def times_geometric(self, step: int, count: int) -> "MinPlusSeries":
        """The selected product with sum_{n=0}^{count} t^n q^(step n), truncated at q^M."""
        result = self.coeff.copy()
        layer = self.coeff
        for _ in range(count):
            if step > self.truncation:
                break
            shifted = np.full_like(layer, UNREACHABLE)
            shifted[step:] = layer[:-step]
            reachable = shifted != UNREACHABLE
            if not reachable.any():
                break
            shifted[reachable] += 1
            better = reachable & ((result == UNREACHABLE) | (shifted < result))
            result[better] = shifted[better]
            layer = shifted
        result.setflags(write=False)
        return MinPlusSeries(truncation=self.truncation, coeff=result)


def check_truncation(truncation: int):
    if truncation < 0:
        raise DomainError(f"Truncation must be nonnegative, got {truncation}")
    if truncation + 1 > MAX_TABLE_ENTRIES:
        raise ResourceError(f"Truncation {truncation} exceeds the table budget of {MAX_TABLE_ENTRIES} entries")


def iter_products(k: int, truncation: int, cap_vector: CapVector = None):
    """Yield f_1, ..., f_k, where f_i only uses the squares 1..i^2."""
    check_truncation(truncation)
    cap_vector = cap_vector or caps(k)
    series = MinPlusSeries.one(truncation)
    for i in range(1, k + 1):
        series = series.times_geometric(i * i, cap_vector.rounds(i, truncation))
        yield series


def partial_products(k: int, truncation: int) -> list:
    return list(iter_products(k, truncation))
