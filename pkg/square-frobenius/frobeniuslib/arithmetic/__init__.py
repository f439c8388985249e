__all__ = [
    "Factorization",
    "factorize",
    "is_prime",
    "prime_count",
    "sieve_primes",
    "is_sum_two_squares",
    "is_sum_three_squares",
    "iota",
    "tau",
    "square_decomposition",
    "prime_decomposition",
]

from .primes import Factorization, factorize, is_prime, prime_count, sieve_primes
from .classify import (
    iota,
    is_sum_three_squares,
    is_sum_two_squares,
    prime_decomposition,
    square_decomposition,
    tau,
)
