__all__ = [
    "frobenius_dp",
    "iota_bruteforce",
    "iota_k_bruteforce",
    "tau_bruteforce",
    "iota_bruteforce_table",
    "iota_k_bruteforce_table",
    "tau_bruteforce_table",
    "sylvester",
]

from .bruteforce import (
    frobenius_dp,
    iota_bruteforce,
    iota_bruteforce_table,
    iota_k_bruteforce,
    iota_k_bruteforce_table,
    sylvester,
    tau_bruteforce,
    tau_bruteforce_table,
)
