"""Exception types shared across the package."""


class PolydegError(Exception):
    """Base class for every error raised by polydeg."""


class NonUnit(PolydegError, ArithmeticError):
    pass


class ArityMismatch(PolydegError, ValueError):
    pass


class NotAField(PolydegError):
    pass


class ZeroComponent(PolydegError, ValueError):
    pass


class Inconclusive(PolydegError):
    pass


class BudgetExceeded(PolydegError):
    pass


class UnboundedSemigroup(PolydegError):
    pass


class InternalInfeasible(PolydegError):
    pass


class PreconditionFailed(PolydegError, ValueError):
    pass


class NotElementaryWord(PolydegError, ValueError):
    pass


class TheoremViolated(PolydegError, AssertionError):
    pass


class MissingWitness(PolydegError):
    pass


class BadWitness(PolydegError, ValueError):
    pass


class NotIndependent(PolydegError, ValueError):
    pass


class Unsupported(PolydegError):
    pass


class ParseError(PolydegError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position
