class FrobeniusError(Exception):
    """Base class for every error raised by frobeniuslib."""


class DomainError(FrobeniusError, ValueError):
    """An input lies outside the domain of the operation (e.g. n = 0, a <= 2, gcd != 1)."""


class IntegerRangeError(DomainError):
    """An input whose intermediate values would leave the signed 64-bit range."""


class ValidityError(FrobeniusError, ValueError):
    """A closed form was requested outside the range where it is known to hold."""


class ResourceError(FrobeniusError, RuntimeError):
    """A table, sieve or oracle request exceeds the configured budget."""


class InvariantViolation(FrobeniusError, RuntimeError):
    """A checked mathematical invariant failed. Should never fire."""
