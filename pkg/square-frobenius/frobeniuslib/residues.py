from dataclasses import dataclass


@dataclass(frozen=True)
class ResidueRecord:
    """The smallest semigroup element N_r congruent to r mod a.

    N_r = coefficient * a + m_star * a + r, where coefficient is the minimum number of parts
    (squares or primes) summing to m_star * a + r, and witness lists those parts.
    """

    a: int
    r: int
    m_star: int
    n_r: int
    coefficient: int
    witness: tuple

    def __post_init__(self):
        if self.n_r != self.coefficient * self.a + self.m_star * self.a + self.r:
            raise ValueError(f"Inconsistent residue record for a={self.a}, r={self.r}: N_r={self.n_r}")
