import logging
from dataclasses import dataclass

import numpy as np

from .constants import MAX_TABLE_ENTRIES, UNREACHABLE
from .series import ceil_three_halves, minimal_truncation, partial_products, stability_bound
from ..arithmetic.primes import check_range
from ..errors import DomainError, InvariantViolation, ResourceError

logger = logging.getLogger(__name__)


def default_truncation(k: int) -> int:
    """The minimal window plus one period of slack: ceil(3k/2) k^2."""
    return ceil_three_halves(k) * k * k


def _scan_stability(values: np.ndarray, k: int) -> int:
    """Smallest r0 with values[r + k^2] == values[r] + 1 for every r0 <= r <= M - k^2."""
    k2 = k * k
    if len(values) <= k2:
        return 0
    bad = np.flatnonzero(values[k2:] != values[:-k2] + 1)
    return int(bad[-1]) + 1 if bad.size else 0


@dataclass(frozen=True, eq=False)
class MinRepTable:
    """iota_k(r) for 0 <= r <= truncation, extendable past the truncation by stability."""

    k: int
    truncation: int
    values: np.ndarray
    stable_from: int

    @property
    def period(self) -> int:
        return self.k * self.k

    @property
    def extendable(self) -> bool:
        return self.truncation >= minimal_truncation(self.k)

    def lookup(self, n):
        """iota_k at n (an int or an int array). Past the truncation each k^2 step adds one part."""
        if isinstance(n, (int, np.integer)):
            check_range(int(n))
        n = np.asarray(n, dtype=np.int64)
        if np.any(n < 0):
            raise DomainError(f"iota_k is only defined for nonnegative n, got {n.min()}")
        if np.any(n > self.truncation) and not self.extendable:
            raise DomainError(
                f"Table for k={self.k} stops at {self.truncation}, below the window of "
                f"{minimal_truncation(self.k)} needed to extend it"
            )
        shift = np.maximum(0, -((self.truncation - n) // self.period))
        result = self.values[n - shift * self.period] + shift
        return result if result.ndim else int(result)


def iota_table(k: int, truncation: int = None) -> MinRepTable:
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    if truncation is None:
        truncation = default_truncation(k)

    values = partial_products(k, truncation)[-1].coeff
    if np.any(values == UNREACHABLE):
        raise InvariantViolation(f"Unreachable entry in the iota_{k} table up to {truncation}")

    stable_from = _scan_stability(values, k)
    if truncation >= minimal_truncation(k) and stable_from > stability_bound(k):
        raise InvariantViolation(
            f"iota_{k} stabilizes only from {stable_from}, above the proven bound {stability_bound(k)}"
        )
    logger.debug(f"Built iota_{k} table up to {truncation}, stable from {stable_from}")
    return MinRepTable(k=k, truncation=truncation, values=values, stable_from=stable_from)


def _check_table(k: int, table: MinRepTable):
    if table.k != k:
        raise DomainError(f"Table was built for k={table.k}, not k={k}")


def _check_length(k: int, n: int, count: int):
    if count > MAX_TABLE_ENTRIES:
        raise ResourceError(
            f"A representation of {n} by squares up to {k}^2 has {count} parts, above {MAX_TABLE_ENTRIES}"
        )


def iota_k(k: int, n: int, table: MinRepTable) -> int:
    """Fewest squares from 1^2..k^2 summing to n (0 for n = 0)."""
    _check_table(k, table)
    return table.lookup(n)


def optimal_representation(k: int, n: int, table: MinRepTable) -> tuple:
    """A largest-first multiset of bases whose squares sum to n, iota_k(n) of them."""
    _check_table(k, table)
    parts = []
    remaining = n
    count = table.lookup(remaining)
    _check_length(k, n, count)
    while remaining > 0:
        for i in range(k, 0, -1):
            if i * i <= remaining and table.lookup(remaining - i * i) == count - 1:
                parts.append(i)
                remaining -= i * i
                count -= 1
                break
        else:
            raise InvariantViolation(f"No predecessor for {remaining} in the iota_{k} table")
    return tuple(sorted(parts, reverse=True))


def greedy_representation(k: int, n: int) -> tuple:
    """Take the largest square that fits, repeatedly. Often longer than optimal."""
    if k < 1 or n < 0:
        raise DomainError(f"Need k >= 1 and n >= 0, got k={k}, n={n}")
    _check_length(k, n, n // (k * k) + k * k)
    parts = []
    for i in range(k, 0, -1):
        count, n = divmod(n, i * i)
        parts += [i] * count
    return tuple(parts)


def stability_threshold(k: int, table: MinRepTable) -> int:
    _check_table(k, table)
    if not table.extendable:
        raise DomainError(f"Table for k={k} stops at {table.truncation}, below {minimal_truncation(k)}")
    return table.stable_from


def irregular_terms(table: MinRepTable) -> list:
    """(r, iota_k(r)) for every entry stability from r - k^2 does not predict."""
    k2 = table.period
    values = table.values
    irregular = np.ones(len(values), dtype=bool)
    if len(values) > k2:
        irregular[k2:] = values[k2:] != values[:-k2] + 1
    return [(int(r), int(values[r])) for r in np.flatnonzero(irregular)]
