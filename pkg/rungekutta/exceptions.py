class RungeKuttaError(ValueError):
    """Base class for Runge-Kutta errors."""


class TableauError(RungeKuttaError):
    """Butcher tableau is not explicit or violates a consistency condition."""


class IntegrationError(RungeKuttaError):
    """The right-hand side produced a non-finite value."""

    def __init__(self, t, message=None):
        self.t = t
        super().__init__(message or f"non-finite right-hand side at t = {t!r}")
