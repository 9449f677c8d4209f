"""Exception hierarchy for negamma."""


class NegammaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(NegammaError, ValueError):
    """An argument lies outside the domain of the requested function."""


class RangeOverflowError(NegammaError, OverflowError):
    """The result is not representable in double precision.

    Functions that can overflow accept ``log_scaled=True`` to return a
    mantissa together with a natural-log scale instead.
    """


class PrecisionError(NegammaError, ArithmeticError):
    """The working precision of an oracle computation was insufficient."""


class QuadratureError(NegammaError, ArithmeticError):
    """A quadrature rule failed its own error estimate."""


class GenerationError(NegammaError, RuntimeError):
    """Coefficient generation violated an exact identity (a pipeline bug)."""
