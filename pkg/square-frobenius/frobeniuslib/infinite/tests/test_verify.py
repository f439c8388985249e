import pytest

from .. import verify
from ..constants import PRIME_CHECK_END
from ...errors import DomainError


def test_conjecture():
    assert verify.verify_conjecture_squares(31) == []
    assert verify.verify_conjecture_squares(100) == []
    assert verify.verify_conjecture_squares(1000) == []


def test_conjecture_domain():
    with pytest.raises(DomainError):
        verify.verify_conjecture_squares(30)


def test_primes_range():
    assert verify.verify_theorem_primes_range()
    assert verify.prime_range_failures() == []


def test_counting_margin():
    # pi(46) = 14, pi(92) = 24
    assert verify.counting_margin(46) == -15
    assert verify.counting_margin(2468) > 0
    with pytest.raises(DomainError):
        verify.counting_margin(2469)


def test_counting_failures():
    assert verify.counting_failures() == []
    assert verify.counting_failures(PRIME_CHECK_END) == []
    with pytest.raises(DomainError):
        verify.counting_failures(PRIME_CHECK_END - 1)
