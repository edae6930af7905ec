"""Error types raised by the library.

Every error is a subclass of SubspaceCodeError so callers can catch the
whole family; most double as ValueError for idiomatic handling.
"""


class SubspaceCodeError(Exception):
    """Base class for all library errors."""


class NotPrime(SubspaceCodeError, ValueError):
    """Field characteristic is not a prime."""


class OrderTooLarge(SubspaceCodeError, ValueError):
    """Field order exceeds the configured table limit."""


class DivisionByZero(SubspaceCodeError, ZeroDivisionError):
    """Division or inversion of the zero element."""


class DimensionMismatch(SubspaceCodeError, ValueError):
    """Vector or matrix dimensions are incompatible with the operation."""


class AmbientMismatch(SubspaceCodeError, ValueError):
    """Subspaces live in different ambient spaces (or fields)."""


class TooLarge(SubspaceCodeError, ValueError):
    """Requested enumeration exceeds the configured limit."""


class OutOfRange(SubspaceCodeError, ValueError):
    """Numeric argument outside its admissible range."""


class BadParams(SubspaceCodeError, ValueError):
    """Parameter combination violates a construction precondition."""


class NotDivisible(BadParams):
    """A divisibility precondition (such as b | M) fails."""


class DuplicateBlock(SubspaceCodeError, ValueError):
    """A block set contains the same subspace twice."""


class MixedDimensions(SubspaceCodeError, ValueError):
    """A block set mixes subspaces of different dimensions."""


class DimensionTooLarge(SubspaceCodeError, ValueError):
    """A subspace dimension exceeds the declared column width b."""


class NoRecovery(SubspaceCodeError):
    """No recovery set exists for the requested target."""


class Inconsistent(SubspaceCodeError):
    """Input data is not consistent with any codeword."""
