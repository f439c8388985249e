"""The residue-class closed form of g(a, a+1^2, ..., a+k^2) and the exact start of its validity."""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .apery import default_table, formula_start, frobenius_direct
from .constants import SEARCH_CHUNK_SIZE
from ..errors import DomainError, ValidityError
from ..minplus import ceil_three_halves
from ..parallel import chunked, make_parallel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormulaCoefficients:
    """t_{k,j} and r_{k,j} for j = 0..k^2-1, with u and the exact lower bound u_hat."""

    k: int
    u: int
    t: tuple
    r: tuple
    u_hat: int

    def evaluate(self, a: int) -> int:
        return evaluate(a, self.k, self.t, self.r)


def evaluate(a: int, k: int, t, r) -> int:
    """(t_j a + r_j) + (a + k^2)(floor(a/k^2) - ceil(3k/2) - 1), j = a mod k^2. No validity check."""
    k2 = k * k
    j = a % k2
    return (t[j] * a + r[j]) + (a + k2) * (a // k2 - ceil_three_halves(k) - 1)


@lru_cache(maxsize=None)
def _window_maxima(k: int) -> tuple:
    """For each class j, the largest r in [a - k^2, a - 1] maximizing iota_k, where a = u + j."""
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    k2 = k * k
    u = formula_start(k)
    table = default_table(k)
    t, r = [], []
    for j in range(k2):
        a = u + j
        window = table.lookup(np.arange(a - k2, a, dtype=np.int64))
        top = int(window.max())
        t.append(top - 1)
        r.append(a - k2 + int(np.flatnonzero(window == top)[-1]))
    return tuple(t), tuple(r)


def _disagreements(moduli: range, k: int) -> list:
    t, r = _window_maxima(k)
    table = default_table(k)
    return [a for a in moduli if frobenius_direct(a, k, table) != evaluate(a, k, t, r)]


@lru_cache(maxsize=None)
def exact_lower_bound(k: int) -> int:
    """Smallest a >= 3 from which the closed form matches the direct value for every larger a."""
    u = formula_start(k)
    logger.info(f"Searching u_hat for k={k} over a in [3, {u}]")
    # build the shared table and coefficients before fanning out
    _window_maxima(k)
    parallel_disagreements = make_parallel(_disagreements)
    misses = parallel_disagreements(chunked(3, u + 1, SEARCH_CHUNK_SIZE), k)
    u_hat = max(misses) + 1 if misses else 3
    logger.info(f"u_hat for k={k} is {u_hat} ({len(misses)} disagreements below it)")
    return u_hat


@lru_cache(maxsize=None)
def coefficient_sequences(k: int) -> FormulaCoefficients:
    t, r = _window_maxima(k)
    return FormulaCoefficients(k=k, u=formula_start(k), t=t, r=r, u_hat=exact_lower_bound(k))


def g_formula(a: int, k: int, coeffs: FormulaCoefficients = None) -> int:
    coeffs = coeffs or coefficient_sequences(k)
    if coeffs.k != k:
        raise DomainError(f"Coefficients were built for k={coeffs.k}, not k={k}")
    if a < coeffs.u_hat:
        raise ValidityError(
            f"The closed form for k={k} only holds from a={coeffs.u_hat}, got a={a}; use frobenius_direct"
        )
    return coeffs.evaluate(a)


def quadratic_form(coeffs: FormulaCoefficients) -> list:
    """(j, c, d) with g(a) = (a^2 + c a) / k^2 - d on the class a = j mod k^2."""
    k2 = coeffs.k * coeffs.k
    half = ceil_three_halves(coeffs.k)
    return [(j, k2 * (coeffs.t[j] - half) - j, (half + 1) * k2 + j - coeffs.r[j]) for j in range(k2)]
