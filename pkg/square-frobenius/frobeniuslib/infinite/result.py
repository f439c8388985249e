from dataclasses import dataclass

from ..errors import DomainError, InvariantViolation
from ..residues import ResidueRecord


@dataclass(frozen=True)
class InfiniteResult:
    """g of an infinite sequence, the largest r attaining max N_r, and which closed form applied."""

    a: int
    g: int
    argmax_r: int
    case: str
    record: ResidueRecord


def check_residue(a: int, r: int):
    if a < 2:
        raise DomainError(f"a must be at least 2, got {a}")
    if not 1 <= r <= a - 1:
        raise DomainError(f"r must lie in [1, {a - 1}], got {r}")


def sweep(a: int, r: int, m_max: int, parts) -> tuple:
    """(N_r, m) minimizing parts(m a + r) a + m a + r over 0 <= m <= m_max, smallest m on ties."""
    best = None
    for m in range(m_max + 1):
        n = m * a + r
        value = parts(n) * a + n
        if best is None or value < best[0]:
            best = (value, m)
    return best


def assemble(a: int, records: list, closed_form: tuple) -> InfiniteResult:
    """Reduce the residue records to g and check it against the closed form when one applies."""
    if a < 2:
        raise DomainError(f"a must be at least 2, got {a}")
    top = max(records, key=lambda record: (record.n_r, record.r))
    g = top.n_r - a
    case, value = closed_form
    if value is not None and value != g:
        raise InvariantViolation(f"Closed form {case} gives {value} for a={a}, direct maximum gives {g}")
    return InfiniteResult(a=a, g=g, argmax_r=top.r, case=case, record=top)
