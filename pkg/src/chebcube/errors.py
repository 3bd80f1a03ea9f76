"""Exception types raised by chebcube."""


class DomainError(ValueError):
    """A point lies outside [-1, 1] (beyond the clamping tolerance)."""


class ConvergenceError(ArithmeticError):
    """An iterative procedure did not reach its tolerance."""
