"""Exception hierarchy."""


class EllresError(Exception):
    """Base class for all package errors."""


class OrderMismatchError(EllresError):
    """Arithmetic between series of different truncation orders."""


class NonUnitSeriesError(EllresError):
    """Inversion of a series whose constant term is (relatively) too small."""

    def __init__(self, message: str, magnitude: float):
        super().__init__(message)
        self.magnitude = magnitude


class IllConditionedError(EllresError):
    """A localization denominator is too close to zero to trust."""


class AnnulusError(EllresError):
    """No valid quadrature annulus separates the pole moduli."""


class SamplingError(EllresError):
    """Rejection sampling exhausted its retry budget."""


class UsageError(EllresError):
    """Caller violated a precondition (CLI exit code 2, not a math FAIL)."""
