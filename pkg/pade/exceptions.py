from fps.exceptions import SeriesError


class PadeError(SeriesError):
    pass


class DegeneratePadeError(PadeError):
    """The denominator system for [L/M] is singular."""

    def __init__(self, L, M):
        self.L = L
        self.M = M
        super().__init__(f"[{L}/{M}] Padé system is singular")


class PoleError(PadeError, ZeroDivisionError):
    pass
