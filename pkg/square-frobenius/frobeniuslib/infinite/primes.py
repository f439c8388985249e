"""The infinite prime sequence (a, a+1, a+2, a+3, a+5, a+7, ...)."""

from .constants import CASE_DIRECT, CASE_ONE_A, CASE_TWO_A, PRIME_SWEEP
from .result import InfiniteResult, assemble, check_residue, sweep
from ..arithmetic import prime_decomposition, tau
from ..residues import ResidueRecord


def n_r_infinite_primes(a: int, r: int) -> ResidueRecord:
    check_residue(a, r)
    n_r, m = sweep(a, r, PRIME_SWEEP, tau)
    n = m * a + r
    witness = prime_decomposition(n)
    return ResidueRecord(a=a, r=r, m_star=m, n_r=n_r, coefficient=len(witness), witness=witness)


def two_a_residues(a: int) -> list:
    return [r for r in range(1, a) if tau(r) == 3 and tau(a + r) >= 2]


def closed_form_primes(a: int) -> tuple:
    """(case, g) from the 2a or a closed form, or (direct, None) when neither hypothesis holds."""
    residues = two_a_residues(a)
    if residues:
        return CASE_TWO_A, 2 * a + max(residues)
    residues = [r for r in range(1, a) if tau(r) == 2 or (tau(r) == 3 and tau(a + r) == 1)]
    if residues:
        return CASE_ONE_A, a + max(residues)
    return CASE_DIRECT, None


def g_infinite_primes(a: int) -> InfiniteResult:
    records = [n_r_infinite_primes(a, r) for r in range(1, a)]
    return assemble(a, records, closed_form_primes(a))
