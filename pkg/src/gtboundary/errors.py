"""Exception hierarchy shared by all modules."""


class GTError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(GTError, ValueError):
    """Shapes or lengths of the inputs do not match."""


class DomainError(GTError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(GTError, ZeroDivisionError):
    """Evaluation hit a pole (a vanishing denominator)."""


class UnsupportedAnnulusError(GTError, ValueError):
    """A rational function has a pole on the unit circle."""


class PreconditionError(GTError, ValueError):
    """A checked precondition of a formula does not hold."""


class ToleranceNotMet(GTError, RuntimeError):
    """Numerical iteration stopped before reaching the requested tolerance.

    The best available estimate is kept in :attr:`estimate`.
    """

    def __init__(self, message, estimate):
        super().__init__(message)
        self.estimate = estimate
