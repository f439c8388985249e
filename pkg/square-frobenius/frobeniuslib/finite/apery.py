"""N_r for the finite sequence (a, a+1^2, ..., a+k^2) and its Frobenius number by Brauer-Shockley."""

import logging
from functools import lru_cache

import numpy as np

from .constants import LARGE_MODULUS_FACTOR, sweep_cap
from ..arithmetic.primes import check_range
from ..errors import DomainError, InvariantViolation, ResourceError
from ..minplus.constants import MAX_TABLE_ENTRIES
from ..minplus import MinRepTable, ceil_three_halves, iota_table, optimal_representation
from ..residues import ResidueRecord

logger = logging.getLogger(__name__)


def formula_start(k: int) -> int:
    """u = (ceil(3k/2) + 1) k^2, from where the residue-class formula is proven."""
    return (ceil_three_halves(k) + 1) * k * k


@lru_cache(maxsize=None)
def default_table(k: int) -> MinRepTable:
    """One shared iota_k table per k, wide enough for every coefficient window."""
    return iota_table(k, formula_start(k) + k * k)


def _check_modulus(a: int, k: int, table: MinRepTable):
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    if a < 2:
        raise DomainError(f"a must be at least 2, got {a}")
    check_range(a, "a")
    if table.k != k:
        raise DomainError(f"Table was built for k={table.k}, not k={k}")


def _lower_bound(n, a: int, k2: int):
    # every part is at most k^2
    return -(-n // k2) * a + n


def residue_minima(a: int, table: MinRepTable):
    """All N_r, 0 <= r < a, and the smallest minimizing m for each, as int64 arrays."""
    k = table.k
    if a > MAX_TABLE_ENTRIES:
        raise ResourceError(f"a={a} needs {a} residue entries, above the table budget of {MAX_TABLE_ENTRIES}")
    k2 = k * k
    residues = np.arange(a, dtype=np.int64)
    m_star = np.zeros(a, dtype=np.int64)
    if a >= LARGE_MODULUS_FACTOR * k2:
        return table.lookup(residues) * a + residues, m_star

    best = np.full(a, np.iinfo(np.int64).max, dtype=np.int64)
    active = np.ones(a, dtype=bool)
    for m in range(sweep_cap(k) + 1):
        n = m * a + residues
        active &= _lower_bound(n, a, k2) < best
        idx = np.flatnonzero(active)
        if idx.size == 0:
            return best, m_star
        value = table.lookup(n[idx]) * a + n[idx]
        improved = value < best[idx]
        best[idx[improved]] = value[improved]
        m_star[idx[improved]] = m
    raise InvariantViolation(f"m-sweep for a={a}, k={k} did not close within {sweep_cap(k)} steps")


def n_r_finite(a: int, k: int, r: int, table: MinRepTable = None) -> ResidueRecord:
    table = table or default_table(k)
    _check_modulus(a, k, table)
    if not 0 <= r < a:
        raise DomainError(f"r must lie in [0, {a - 1}], got {r}")
    if r == 0:
        return ResidueRecord(a=a, r=0, m_star=0, n_r=0, coefficient=0, witness=())

    k2 = k * k
    best = None
    for m in range(sweep_cap(k) + 1):
        n = m * a + r
        if best is not None and (a >= LARGE_MODULUS_FACTOR * k2 or _lower_bound(n, a, k2) >= best[0]):
            break
        count = table.lookup(n)
        if best is None or count * a + n < best[0]:
            best = (count * a + n, m, count)
    else:
        raise InvariantViolation(f"m-sweep for a={a}, k={k}, r={r} did not close within {sweep_cap(k)} steps")

    n_r, m, count = best
    witness = optimal_representation(k, m * a + r, table)
    return ResidueRecord(a=a, r=r, m_star=m, n_r=n_r, coefficient=count, witness=witness)


def frobenius_direct(a: int, k: int, table: MinRepTable = None) -> int:
    """g(a, a+1^2, ..., a+k^2) as max N_r - a."""
    if a <= 2:
        raise DomainError(f"The square sequence needs a > 2, got a={a}")
    table = table or default_table(k)
    _check_modulus(a, k, table)
    n_r, _ = residue_minima(a, table)
    return int(n_r.max()) - a
