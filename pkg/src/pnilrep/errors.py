"""
Exception hierarchy for pnilrep.

Validation failures subclass ValueError so callers that only know about
ValueError keep working.
"""


class PnilrepError(Exception):
    """Base class for all pnilrep errors."""


class InvalidPrimeError(PnilrepError, ValueError):
    """Raised when a prime is not an odd prime, or is too small for a law."""


class PrimeMismatchError(PnilrepError, ValueError):
    """Raised when values over different primes are combined."""


class PrecisionMismatchError(PnilrepError, ValueError):
    """Raised when truncated integers of different precision are combined."""


class InsufficientPrecisionError(PnilrepError, ValueError):
    """Raised when a value is too coarse for the requested evaluation."""


class NotInvertibleError(PnilrepError, ValueError):
    """Raised when dividing by an integer divisible by p."""


class ZeroArgumentError(PnilrepError, ValueError):
    """Raised when an operation is undefined at zero."""


class NonGeneratorDirectionError(PnilrepError, ValueError):
    """Raised when a direction leaves the generating stratum."""


class NotInDualError(PnilrepError, ValueError):
    """Raised when a dual point is not a label of the group's dual."""


class IndexOutOfRangeError(PnilrepError, IndexError):
    """Raised when an index is outside the index set of a representation."""


class ResourceCapError(PnilrepError):
    """Raised when an enumeration would exceed a configured cap."""


class UnsupportedLawError(PnilrepError, ValueError):
    """Raised when an operation has no implementation for a group law."""


class IncompleteCoefficientsError(PnilrepError, ValueError):
    """Raised when Fourier synthesis is missing coefficients."""
