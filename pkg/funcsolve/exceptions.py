from fps.exceptions import SeriesError


class EquationError(SeriesError):
    """Base class for formal solver errors."""


class EquationDomainError(EquationError):
    """Input series or parameters outside the equation's domain."""
