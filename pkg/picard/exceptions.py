class GridError(ValueError):
    """Base class for grid function errors."""


class GridDomainError(GridError):
    """Grid function violates an invariant (f(0) = 0, increasing, f(x) >= x) or grids differ."""


class GridRangeError(GridError):
    """Argument outside the range where the grid function or its inverse is known."""
