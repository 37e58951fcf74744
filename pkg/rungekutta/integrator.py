import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
import pandas as pd

from .exceptions import IntegrationError, RungeKuttaError
from .tableau import classical_rk4

logger = logging.getLogger(__name__)

BENCHMARK_STEP = Fraction(1, 10)
BENCHMARK_STEPS = 10
BENCHMARK_COLUMNS = ['step', 't', 'v', 'w']


@dataclass(frozen=True)
class IVPSystem:
    """y' = rhs(t, y), y(t0) = y0, with y a d-vector."""
    rhs: Callable
    y0: np.ndarray
    t0: float = 0.0

    def __post_init__(self):
        y0 = np.atleast_1d(np.array(self.y0, dtype=float))
        y0.setflags(write=False)
        object.__setattr__(self, 'y0', y0)
        object.__setattr__(self, 't0', float(self.t0))

    @property
    def dimension(self):
        return self.y0.size

    def evaluate(self, t, y):
        k = np.atleast_1d(np.asarray(self.rhs(t, y), dtype=float))
        if k.shape != y.shape:
            raise RungeKuttaError(f"rhs returned shape {k.shape}, expected {y.shape}")
        if not np.all(np.isfinite(k)):
            raise IntegrationError(t)
        return k


def rk_integrate(tab, system, h, nsteps):
    """All nsteps + 1 states (t_i, y_i) of the fixed-step explicit method ``tab``.

    t_i is computed as t0 + i*h so that the time column does not drift.
    """
    h = float(h)
    if not h > 0:
        raise RungeKuttaError(f"step must be positive, got {h}")
    if nsteps < 0:
        raise RungeKuttaError(f"number of steps must be non-negative, got {nsteps}")
    tab.validate()
    a, b, c = tab.as_arrays()
    s = tab.stages

    y = system.y0.copy()
    states = [(system.t0, y.copy())]
    for i in range(nsteps):
        t = system.t0 + i * h
        k = np.zeros((s, system.dimension))
        for stage in range(s):
            k[stage] = system.evaluate(t + c[stage] * h, y + h * (a[stage, :stage] @ k[:stage]))
        y = y + h * (b @ k)
        if not np.all(np.isfinite(y)):
            raise IntegrationError(t + h)
        states.append((system.t0 + (i + 1) * h, y.copy()))
    logger.debug("%s: %d steps of %g from t = %g", tab.name or 'rk', nsteps, h, system.t0)
    return states


def benchmark_system():
    """v'' v' - v' = 0 with v(0) = 0, v'(0) = 2, as the first-order system v' = w, w' = 1.

    The equation factors as v' (v'' - 1) = 0 and v' stays positive from w(0) = 2.
    """
    return IVPSystem(rhs=lambda t, y: np.array([y[1], 1.0]), y0=(0.0, 2.0))


def benchmark_exact(t):
    return 2 * t + t ** 2 / 2


def benchmark_table(tab=None, h=BENCHMARK_STEP, nsteps=BENCHMARK_STEPS):
    """Benchmark trajectory as a frame with columns step, t, v, w."""
    tab = tab or classical_rk4()
    states = rk_integrate(tab, benchmark_system(), h, nsteps)
    return pd.DataFrame(
        [(i, t, y[0], y[1]) for i, (t, y) in enumerate(states)],
        columns=BENCHMARK_COLUMNS,
    )


def rk4_benchmark():
    """Classical RK4 on the benchmark with h = 1/10 over ten steps."""
    return benchmark_table(classical_rk4())


def displayed(frame, digits=3):
    """Table as printed: t and v rounded for display."""
    out = frame[['step', 't', 'v']].copy()
    out['t'] = out['t'].round(digits)
    out['v'] = out['v'].round(digits)
    return out


def plot_points(frame):
    """Two-column (t, v) text for gnuplot."""
    return ''.join(f"{float(t)!r} {float(v)!r}\n" for t, v in zip(frame['t'], frame['v']))


def global_error(tab, h, t_end=1.0):
    """|y(t_end) - e^t_end| for y' = y, y(0) = 1."""
    nsteps = round(t_end / h)
    system = IVPSystem(rhs=lambda t, y: y, y0=(1.0,))
    _, y = rk_integrate(tab, system, h, nsteps)[-1]
    return abs(float(y[0]) - math.exp(t_end))


def empirical_order(tab, h=0.1, t_end=1.0):
    """log2 of the error ratio between steps h and h/2 on y' = y."""
    coarse = global_error(tab, h, t_end)
    fine = global_error(tab, h / 2, t_end)
    return math.log2(coarse / fine)
