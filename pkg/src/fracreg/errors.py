"""Exception types shared across the package."""


class FracregError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FracregError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole (gamma, zeta, or a kernel
    normalization that hits one)."""


class NonConvergenceError(FracregError, ArithmeticError):
    """A series did not reach the target tolerance within the term cap."""


class IncompatibleSchemeError(FracregError, ValueError):
    """The requested discretization cannot be applied to this problem
    (e.g. a kernel that needs vanishing initial data on a direct solve)."""


class UnsupportedProblemError(FracregError, ValueError):
    """The operation is only defined for a narrower problem class than the
    one supplied (nonzero forcing, missing closed-form solution, ...)."""
