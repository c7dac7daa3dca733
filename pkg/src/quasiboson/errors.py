"""Exception hierarchy shared by every module."""


class QuasibosonError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QuasibosonError, ValueError):
    """An argument lies outside the admissible domain of an operation."""


class DivergenceError(DomainError):
    """The requested quantity is unbounded at this argument."""


class ValidationError(QuasibosonError, ValueError):
    """An input object violates its own invariants (e.g. normalization)."""


class CapacityError(QuasibosonError, RuntimeError):
    """A brute-force enumeration would exceed its size guard."""


class ConvergenceError(QuasibosonError, ArithmeticError):
    """A numerical procedure stopped before meeting its tolerance.

    ``estimate`` and ``error`` carry the best value reached so far.
    """

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error
