r"""Butcher tableaus of explicit Runge-Kutta methods, stored as exact rationals.

.. math::

    \begin{array}{c|cccc}
    0 & & & & \\
    c_{2} & a_{21} & & & \\
    \vdots & \vdots & \ddots & & \\
    c_{s} & a_{s1} & \cdots & a_{s,s-1} & \\
    \hline & b_{1} & \cdots & b_{s-1} & b_{s}
    \end{array}

A tableau is accepted only if it is explicit (a_ij = 0 for j >= i), consistent
(sum b_i = 1) and satisfies the row-sum condition c_i = sum_j a_ij.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from .exceptions import TableauError

F = Fraction


@dataclass(frozen=True)
class ButcherTableau:
    a: Tuple[Tuple[Fraction, ...], ...]
    b: Tuple[Fraction, ...]
    c: Tuple[Fraction, ...]
    name: str = ''

    def __post_init__(self):
        s = len(self.b)
        a = tuple(tuple(Fraction(x) for x in row) + (Fraction(0),) * (s - len(row)) for row in self.a)
        b = tuple(Fraction(x) for x in self.b)
        c = tuple(Fraction(x) for x in self.c)
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'c', c)
        self.validate()

    @property
    def stages(self):
        return len(self.b)

    def validate(self):
        s = self.stages
        if s == 0:
            raise TableauError("a tableau needs at least one stage")
        if len(self.a) != s or len(self.c) != s or any(len(row) != s for row in self.a):
            raise TableauError(f"a must be {s}x{s} and c must have {s} nodes")
        for i, row in enumerate(self.a):
            if any(row[j] for j in range(i, s)):
                raise TableauError(f"row {i} has entries on or above the diagonal; not explicit")
        if sum(self.b) != 1:
            raise TableauError(f"weights sum to {sum(self.b)}, not 1")
        for i, row in enumerate(self.a):
            if self.c[i] != sum(row):
                raise TableauError(f"c[{i}] = {self.c[i]} but row {i} of a sums to {sum(row)}")

    def as_arrays(self):
        """(a, b, c) as float64 arrays for integration."""
        return (
            np.array([[float(x) for x in row] for row in self.a]),
            np.array([float(x) for x in self.b]),
            np.array([float(x) for x in self.c]),
        )


def explicit_tableau(name, rows, b):
    """Tableau from the strictly-lower rows of stages 2..s; c follows from the row sums."""
    a = ((),) + tuple(tuple(row) for row in rows)
    c = (Fraction(0),) + tuple(sum(Fraction(x) for x in row) for row in rows)
    return ButcherTableau(a=a, b=tuple(b), c=c, name=name)


def classical_rk4():
    """The classical four-stage method: a21 = a32 = 1/2, a43 = 1, b = (1/6, 1/3, 1/3, 1/6)."""
    return ButcherTableau(
        a=((), (F(1, 2),), (0, F(1, 2)), (0, 0, 1)),
        b=(F(1, 6), F(1, 3), F(1, 3), F(1, 6)),
        c=(0, F(1, 2), F(1, 2), 1),
        name='rk4',
    )


TABLEAUS = {
    'euler': lambda: ButcherTableau(a=((),), b=(1,), c=(0,), name='euler'),
    'midpoint': lambda: explicit_tableau('midpoint', [(F(1, 2),)], (0, 1)),
    'heun3': lambda: explicit_tableau(
        'heun3', [(F(1, 3),), (0, F(2, 3))], (F(1, 4), 0, F(3, 4))
    ),
    'rk4': classical_rk4,
    'rk38': lambda: explicit_tableau(
        'rk38', [(F(1, 3),), (F(-1, 3), 1), (1, -1, 1)], (F(1, 8), F(3, 8), F(3, 8), F(1, 8))
    ),
}


def get_tableau(name):
    try:
        return TABLEAUS[name]()
    except KeyError:
        raise TableauError(f"unknown method {name!r}; choose from {', '.join(TABLEAUS)}") from None
