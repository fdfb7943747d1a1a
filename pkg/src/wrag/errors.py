"""Exception types raised by the library."""


class WragError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(WragError, ValueError):
    pass


class InvalidChoiceError(WragError, ValueError):
    """A triangle was picked that is not currently choosable."""


class DomainError(WragError, ValueError):
    """The query is undefined on this input (e.g. diameter of a disconnected graph)."""


class ResourceLimitError(WragError):
    """An exponential-time operation was asked to run past its size cap."""


class InvariantViolation(WragError, AssertionError):
    pass


class NumericalError(WragError, ArithmeticError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual
