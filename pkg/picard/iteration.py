"""Picard map f -> F, F(x) = integral_0^x exp(f^-1(t)) dt, on a uniform grid."""
import logging
from collections import namedtuple
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.integrate import cumulative_trapezoid, trapezoid

from .exceptions import GridDomainError, GridRangeError
from .grid import GridFunction, invert_many

logger = logging.getLogger(__name__)

SUBSAMPLES = 4
SIMPSON_WEIGHTS = np.array([1.0, 4.0, 2.0, 4.0, 1.0])
INTERLEAVING_TOLERANCE = 1e-9
CONTRACTION_SLACK = 1e-6

ContractionCheck = namedtuple('ContractionCheck', ['n', 'lhs', 'rhs', 'ok'])
InterleavingViolation = namedtuple('InterleavingViolation', ['lower', 'upper', 'node', 'excess'])


def picard_step(f):
    """Image of f under the Picard map, by composite Simpson with 4 subsamples per cell."""
    f.validate()
    if f.values[-1] < f.xmax:
        raise GridDomainError(
            f"f(xmax) = {f.values[-1]!r} < xmax; f^-1 is not defined on all of [0, xmax]"
        )
    m = f.m
    samples = np.linspace(0.0, f.xmax, SUBSAMPLES * m + 1)
    integrand = np.exp(invert_many(f, samples))
    index = SUBSAMPLES * np.arange(m)[:, None] + np.arange(SUBSAMPLES + 1)
    cells = (integrand[index] @ SIMPSON_WEIGHTS) * (f.h / (3 * SUBSAMPLES))
    image = GridFunction(f.xmax, np.concatenate(([0.0], np.cumsum(cells))))
    return image.validate()


def _restricted_difference(f, g, T):
    if not f.shares_grid(g):
        raise GridDomainError("phi needs grid functions on the same grid")
    if not 0 < T <= f.xmax:
        raise GridRangeError(f"T must lie in (0, {f.xmax}], got {T}")
    nodes = f.nodes
    k = int(np.searchsorted(nodes, T, side='right'))
    t = nodes[:k]
    diff = np.abs(f.values[:k] - g.values[:k])
    if t[-1] < T:
        t = np.append(t, T)
        diff = np.append(diff, abs(f(T) - g(T)))
    return t, diff


def phi(f, g, T):
    """Integral of |f - g| over [0, T] by the trapezoid rule."""
    t, diff = _restricted_difference(f, g, T)
    return float(trapezoid(diff, t))


def weighted_phi(f, g, T):
    """Integral over [0, T] of exp(t) * phi(f, g, t)."""
    t, diff = _restricted_difference(f, g, T)
    running = cumulative_trapezoid(diff, t, initial=0.0)
    return float(trapezoid(np.exp(t) * running, t))


def _contraction_rows(iterates, T):
    rows = []
    for n in range(len(iterates) - 2):
        lhs = phi(iterates[n + 1], iterates[n + 2], T)
        rhs = weighted_phi(iterates[n], iterates[n + 1], T)
        rows.append(ContractionCheck(n + 1, lhs, rhs, lhs <= rhs + CONTRACTION_SLACK))
    return rows


@dataclass(frozen=True)
class PicardOrbit:
    """Stored iterates f_1 = identity, f_2, ..., f_K and the checks made on them.

    ``gaps[k-1]`` is the sup-norm of f_2k - f_2k-1 on the grid; ``separation[k-1]``
    counts the nodes where f_2k - f_2k-1 exceeds the interleaving tolerance.
    """
    iterates: Tuple[GridFunction, ...]
    gaps: Tuple[float, ...]
    phi_checks: Tuple[Tuple[float, float], ...]
    violations: Tuple[InterleavingViolation, ...]
    separation: Tuple[int, ...]

    @property
    def interleaving_ok(self):
        return not self.violations

    @property
    def xmax(self):
        return self.iterates[0].xmax

    @property
    def m(self):
        return self.iterates[0].m

    @property
    def tolerance(self):
        return interleaving_tolerance(self.iterates[0])

    def params(self):
        return {'iterations': len(self.iterates), 'xmax': self.xmax, 'grid': self.m}


def interleaving_tolerance(f):
    return INTERLEAVING_TOLERANCE + f.h ** 2


def _ordered(lower, upper, tol):
    excess = lower.values - upper.values
    worst = int(np.argmax(excess))
    return excess[worst] <= tol, worst, float(excess[worst])


def check_interleaving(iterates):
    """f_1 <= f_3 <= f_5 <= ... <= f_6 <= f_4 <= f_2 at every node, within tolerance."""
    tol = interleaving_tolerance(iterates[0])
    odd = list(range(0, len(iterates), 2))
    even = list(range(1, len(iterates), 2))
    pairs = list(zip(odd, odd[1:])) + [(b, a) for a, b in zip(even, even[1:])]
    pairs += [(i, j) for i in odd for j in even]
    violations = []
    for lo, hi in pairs:
        ok, node, excess = _ordered(iterates[lo], iterates[hi], tol)
        if not ok:
            violations.append(InterleavingViolation(lo + 1, hi + 1, node, excess))
    return violations


def run_orbit(iterations, xmax, m):
    if iterations < 2:
        raise GridDomainError(f"an orbit needs at least 2 iterates, got {iterations}")
    if m < 10:
        raise GridDomainError(f"grid needs at least 10 cells, got {m}")
    iterates = [GridFunction.identity(xmax, m)]
    while len(iterates) < iterations:
        iterates.append(picard_step(iterates[-1]))
        logger.debug("picard: iterate %d of %d", len(iterates), iterations)

    tol = interleaving_tolerance(iterates[0])
    gaps, separation = [], []
    for k in range(1, len(iterates), 2):
        diff = iterates[k].values - iterates[k - 1].values
        gaps.append(float(np.max(np.abs(diff))))
        separation.append(int(np.count_nonzero(diff > tol)))

    violations = check_interleaving(iterates)
    for v in violations:
        logger.warning(
            "interleaving violated: f_%d exceeds f_%d by %.3g at node %d",
            v.lower, v.upper, v.excess, v.node,
        )
    rows = _contraction_rows(iterates, xmax)
    logger.info("picard orbit: %d iterates on %d cells, gaps %s", iterations, m, gaps)
    return PicardOrbit(
        iterates=tuple(iterates),
        gaps=tuple(gaps),
        phi_checks=tuple((row.lhs, row.rhs) for row in rows),
        violations=tuple(violations),
        separation=tuple(separation),
    )


def contraction_check(orbit, T):
    """Phi(F_n, F_n+1, T) <= integral_0^T exp(t) Phi(f_n, f_n+1, t) dt for consecutive pairs."""
    if len(orbit.iterates) < 4:
        raise GridDomainError("contraction check needs at least 4 iterates")
    return _contraction_rows(orbit.iterates, T)
