from dataclasses import dataclass

import numpy as np

from .exceptions import GridDomainError, GridRangeError

IDENTITY_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class GridFunction:
    """f sampled at x_i = i*h, h = xmax/m, and read piecewise linearly in between."""
    xmax: float
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 1 or values.size < 2:
            raise GridDomainError("a grid function needs at least two nodes")
        if not (self.xmax > 0 and np.isfinite(self.xmax)):
            raise GridDomainError(f"xmax must be positive and finite, got {self.xmax}")
        if not np.all(np.isfinite(values)):
            raise GridDomainError(f"non-finite value at node {int(np.argmin(np.isfinite(values)))}")
        values.setflags(write=False)
        object.__setattr__(self, 'xmax', float(self.xmax))
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_function(cls, func, xmax, m):
        nodes = np.linspace(0.0, xmax, m + 1)
        return cls(xmax, func(nodes))

    @classmethod
    def identity(cls, xmax, m):
        return cls.from_function(lambda x: x, xmax, m)

    @property
    def m(self):
        return self.values.size - 1

    @property
    def h(self):
        return self.xmax / self.m

    @property
    def nodes(self):
        return np.linspace(0.0, self.xmax, self.m + 1)

    def shares_grid(self, other):
        return self.xmax == other.xmax and self.m == other.m

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(x < 0) or np.any(x > self.xmax):
            raise GridRangeError(f"argument outside [0, {self.xmax}]")
        result = np.interp(x, self.nodes, self.values)
        return float(result) if result.ndim == 0 else result

    def violations(self):
        problems = []
        if self.values[0] != 0:
            problems.append(f"f(0) = {self.values[0]!r}, expected 0")
        steps = np.diff(self.values)
        if np.any(steps <= 0):
            problems.append(f"not strictly increasing at node {int(np.argmax(steps <= 0))}")
        below = self.values < self.nodes - IDENTITY_TOLERANCE
        if np.any(below):
            problems.append(f"f(x) < x at node {int(np.argmax(below))}")
        return problems

    def validate(self):
        problems = self.violations()
        if problems:
            raise GridDomainError("; ".join(problems))
        return self


def invert_many(f, targets):
    """f^-1 at each target, one closed-form linear solve in the bracketing cell."""
    t = np.asarray(targets, dtype=float)
    values = f.values
    if not np.all(np.isfinite(t)):
        raise GridRangeError("inverse targets must be finite")
    if t.size and (t.min() < 0 or t.max() > values[-1]):
        raise GridRangeError(f"inverse only known on [0, {values[-1]!r}]")
    cell = np.clip(np.searchsorted(values, t, side='right') - 1, 0, f.m - 1)
    lo, hi = values[cell], values[cell + 1]
    nodes = f.nodes
    result = nodes[cell] + (t - lo) * ((nodes[cell + 1] - nodes[cell]) / (hi - lo))
    return np.where(t == values[-1], f.xmax, result)


def invert(f, t):
    return float(invert_many(f, [t])[0])
