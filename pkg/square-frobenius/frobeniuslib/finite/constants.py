# a >= LARGE_MODULUS_FACTOR * k^2 means every N_r is attained at m = 0
LARGE_MODULUS_FACTOR = 3


def sweep_cap(k: int) -> int:
    """Hard stop for the m-sweep of the branch-and-bound. Never reached in practice."""
    return 8 * k * k + 8


# moduli per worker task in the u_hat search
SEARCH_CHUNK_SIZE = 64
