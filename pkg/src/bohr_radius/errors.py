"""Exception types shared across the package."""


class BohrRadiusError(Exception):
    """Base class for every package-specific failure."""


class DomainError(BohrRadiusError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class TruncationFailure(BohrRadiusError, ArithmeticError):
    """A series did not meet its stopping criterion within the term budget."""


class QuadratureFailure(BohrRadiusError, ArithmeticError):
    """Adaptive quadrature could not reach the requested tolerance."""


class CostGuard(BohrRadiusError):
    """A combinatorial evaluation path was requested above its cost cap."""


class NoRootInInterval(BohrRadiusError):
    """The deficiency function has no sign change inside (0, 1)."""
