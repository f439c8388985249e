import os

# every input and intermediate must fit a signed 64-bit integer
INT64_MAX = 2**63 - 1

# The sieve starts at this size and doubles on demand, up to SIEVE_LIMIT
INITIAL_SIEVE_SIZE = 1 << 16
SIEVE_LIMIT = int(os.environ.get("FROBENIUS_SIEVE_LIMIT", 50_000_000))

# largest n for which tau(n) is computed
TAU_LIMIT = int(os.environ.get("FROBENIUS_TAU_LIMIT", 10_000_000))

# Miller-Rabin with these bases is exact for every n < 3.3 * 10**24
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

CLASSIFY_CACHE_SIZE = 1 << 16

# factorize gives up once trial division passes this divisor with a composite cofactor left
TRIAL_DIVISION_LIMIT = int(os.environ.get("FROBENIUS_TRIAL_DIVISION_LIMIT", 2_000_000))
