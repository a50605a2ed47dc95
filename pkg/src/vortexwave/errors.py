"""Exception types shared by the numerical modules."""


class DomainError(ValueError):
    """Argument outside the domain where the quantity is defined."""


class RangeError(OverflowError):
    """Result (or an unavoidable intermediate) exceeds double range."""


class AccuracyError(ArithmeticError):
    """An iterative or adaptive scheme failed to reach its tolerance.

    The best available estimate is kept on the exception so callers can
    decide whether it is still usable.
    """

    def __init__(self, message, estimate=None, error_estimate=None):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate
