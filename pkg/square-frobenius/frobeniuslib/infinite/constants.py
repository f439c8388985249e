# N_r(m) for m above these is never smaller than N_r(0): iota <= 4 and tau <= 3
SQUARE_SWEEP = 3
PRIME_SWEEP = 2

CASE_THREE_A = "Thm-3a"
CASE_TWO_A = "Thm-2a"
CASE_ONE_A = "Thm-1a"
CASE_DIRECT = "direct"

# the 3a closed form is conjectured for every a above this
CONJECTURE_START = 30

# the 2a closed form for primes holds above PRIME_CLOSED_FORM_START; even a below PRIME_CHECK_END are checked by search
PRIME_CLOSED_FORM_START = 44
PRIME_CHECK_END = 2467

VERIFY_CHUNK_SIZE = 50

# from PRIME_CHECK_END on, even a are covered by a/2 - pi(a) - pi(2a) > 0; the margin is recomputed up to here
COUNTING_CHECK_END = 100_000
