"""The infinite square sequence (a, a+1^2, a+2^2, ...)."""

from .constants import CASE_DIRECT, CASE_THREE_A, CASE_TWO_A, SQUARE_SWEEP
from .result import InfiniteResult, assemble, check_residue, sweep
from ..arithmetic import iota, square_decomposition
from ..residues import ResidueRecord


def n_r_infinite_squares(a: int, r: int) -> ResidueRecord:
    """N_r = min iota(m a + r) a + m a + r. The witness lists the bases of the squares."""
    check_residue(a, r)
    n_r, m = sweep(a, r, SQUARE_SWEEP, iota)
    n = m * a + r
    return ResidueRecord(a=a, r=r, m_star=m, n_r=n_r, coefficient=iota(n), witness=square_decomposition(n))


def three_a_residues(a: int) -> list:
    return [r for r in range(1, a) if iota(r) == 4 and iota(a + r) >= 3 and iota(2 * a + r) >= 2]


def _two_a(a: int, r: int) -> bool:
    if iota(r) == 4:
        return iota(a + r) == 2 or (iota(a + r) >= 3 and iota(2 * a + r) == 1)
    return iota(r) == 3 and iota(a + r) >= 2


def closed_form_squares(a: int) -> tuple:
    """(case, g) from the 3a or 2a closed form, or (direct, None) when neither hypothesis holds."""
    residues = three_a_residues(a)
    if residues:
        return CASE_THREE_A, 3 * a + max(residues)
    residues = [r for r in range(1, a) if _two_a(a, r)]
    if residues:
        return CASE_TWO_A, 2 * a + max(residues)
    return CASE_DIRECT, None


def g_infinite_squares(a: int) -> InfiniteResult:
    records = [n_r_infinite_squares(a, r) for r in range(1, a)]
    return assemble(a, records, closed_form_squares(a))
