class SeriesError(ValueError):
    """Base class for truncated power series errors."""


class OrderMismatchError(SeriesError):
    """Binary operation on series truncated at different orders."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"series orders differ: {left} != {right}; truncate explicitly")


class CompositionDomainError(SeriesError):
    """Inner series of a composition has a nonzero constant term."""


class NonInvertibleSeriesError(SeriesError):
    """Series has no compositional inverse (S[0] != 0 or S[1] == 0)."""


class ExpDomainError(SeriesError):
    """exp is only taken of series with zero constant term."""


class ReciprocalDomainError(SeriesError):
    """1/S needs S[0] != 0."""


class SerializationError(SeriesError):
    """Malformed series JSON."""
