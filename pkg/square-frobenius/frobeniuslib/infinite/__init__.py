__all__ = [
    "InfiniteResult",
    "closed_form_primes",
    "closed_form_squares",
    "counting_failures",
    "counting_margin",
    "g_infinite_primes",
    "g_infinite_squares",
    "n_r_infinite_primes",
    "n_r_infinite_squares",
    "prime_range_failures",
    "verify_conjecture_squares",
    "verify_theorem_primes_range",
]

from .result import InfiniteResult
from .primes import closed_form_primes, g_infinite_primes, n_r_infinite_primes
from .squares import closed_form_squares, g_infinite_squares, n_r_infinite_squares
from .verify import (
    counting_failures,
    counting_margin,
    prime_range_failures,
    verify_conjecture_squares,
    verify_theorem_primes_range,
)
