import logging

import numpy as np

from .constants import (
    CONJECTURE_START,
    COUNTING_CHECK_END,
    PRIME_CHECK_END,
    PRIME_CLOSED_FORM_START,
    VERIFY_CHUNK_SIZE,
)
from .primes import two_a_residues
from .squares import three_a_residues
from ..arithmetic import prime_count, sieve_primes
from ..errors import DomainError
from ..parallel import chunked, make_parallel

logger = logging.getLogger(__name__)


def _conjecture_failures(moduli: range) -> list:
    return [a for a in moduli if not three_a_residues(a)]


def verify_conjecture_squares(a_max: int) -> list:
    """Every a in (30, a_max] where the 3a closed form does not apply. Expected to be empty."""
    if a_max <= CONJECTURE_START:
        raise DomainError(f"a_max must exceed {CONJECTURE_START}, got {a_max}")
    logger.info(f"Checking the 3a closed form for {CONJECTURE_START} < a <= {a_max}")
    moduli = chunked(CONJECTURE_START + 1, a_max + 1, VERIFY_CHUNK_SIZE)
    counterexamples = make_parallel(_conjecture_failures)(moduli)
    if counterexamples:
        logger.warning(f"Counterexamples to the 3a closed form: {counterexamples}")
    return counterexamples


def _prime_failures(moduli: range) -> list:
    return [a for a in moduli if a % 2 == 0 and not two_a_residues(a)]


def prime_range_failures() -> list:
    """Even a with 44 < a < 2467 that have no r < a with tau(r) = 3 and tau(a + r) >= 2."""
    logger.info(f"Checking the 2a prime closed form for even {PRIME_CLOSED_FORM_START} < a < {PRIME_CHECK_END}")
    return make_parallel(_prime_failures)(chunked(PRIME_CLOSED_FORM_START + 1, PRIME_CHECK_END, VERIFY_CHUNK_SIZE))


def counting_margin(a: int) -> int:
    """a/2 odd candidates less the r with r or r - 2 prime (at most 2 pi(a)) and the r with a + r prime."""
    if a < 2 or a % 2:
        raise DomainError(f"The counting bound is stated for even a >= 2, got {a}")
    return a // 2 - 2 * prime_count(a) - (prime_count(2 * a) - prime_count(a))


def counting_failures(stop: int = COUNTING_CHECK_END) -> list:
    """Even a in [PRIME_CHECK_END, stop] where the counting margin is not positive. Expected to be empty."""
    if stop < PRIME_CHECK_END:
        raise DomainError(f"stop must be at least {PRIME_CHECK_END}, got {stop}")
    logger.info(f"Checking the counting margin for even {PRIME_CHECK_END} <= a <= {stop}")
    pi = np.cumsum(sieve_primes(2 * stop)[: 2 * stop + 1])
    moduli = np.arange(PRIME_CHECK_END + PRIME_CHECK_END % 2, stop + 1, 2)
    margin = moduli // 2 - pi[moduli] - pi[2 * moduli]
    return [int(a) for a in moduli[margin <= 0]]


def verify_theorem_primes_range() -> bool:
    """The search below PRIME_CHECK_END and the counting margin from there on both come back clean."""
    failures = prime_range_failures()
    if failures:
        logger.warning(f"No 2a witness residue for a in {failures}")
    counting = counting_failures()
    if counting:
        logger.warning(f"Counting margin is not positive for a in {counting}")
    return not failures and not counting
