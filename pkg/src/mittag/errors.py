"""Exception types raised across the package."""

from __future__ import annotations


class PoleArgument(ValueError):
    """Gamma evaluated at a nonpositive integer."""


class NonPositiveArgument(ValueError):
    pass


class DomainError(ValueError):
    """Argument outside the real domain of the requested evaluation."""


class VariableMismatch(ValueError):
    pass


class ExponentOutOfRange(ValueError):
    """A monomial exponent is <= -1 where fractional differentiation needs > -1."""


class DegreeTooLarge(ValueError):
    pass


class DivergentParameter(ValueError):
    """A generating-function parameter lies outside the region of convergence."""


class CancellationLoss(ArithmeticError):
    """Series summation lost too many digits to cancellation.

    The best-effort :class:`~mittag.series.EvalResult` is attached as
    ``result`` so callers that only need absolute accuracy can still use it.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class MaxTermsExceeded(ArithmeticError):
    pass


class TailNotNegligible(ArithmeticError):
    """A truncated generating-function sum still has a non-negligible tail."""


class NotConverged(ArithmeticError):
    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class NonFiniteSample(ArithmeticError):
    """The integrand returned NaN or infinity at an interior node."""
