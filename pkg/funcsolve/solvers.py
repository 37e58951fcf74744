"""Degree-by-degree formal solvers.

Every equation here determines S[n+1] from S[0..n]: the right-hand side
coefficient of x**n only reads S[1..n]. Two strategies produce the same
series:

* ``direct`` rebuilds the right-hand side at each degree exactly as the
  equation is written (exp(revert(S)) or F(S o S)).
* ``incremental`` keeps power tables of S (and of S o S) and extends them by
  one degree per step. For f' = exp(f^-1) it solves the equivalent
  f'(f(y)) = exp(y), which needs no reversion at all.
"""
import logging
from collections import namedtuple
from fractions import Fraction
from math import factorial

from fps.operations import (
    antidifferentiate,
    compose,
    differentiate,
    exp_series,
    reciprocal,
    revert,
)
from fps.powers import PowerTable
from fps.series import TruncatedSeries

from .equations import EquationKind, Kind
from .exceptions import EquationDomainError

logger = logging.getLogger(__name__)

STRATEGIES = ('incremental', 'direct')

Residual = namedtuple('Residual', ['primary', 'derivative_form'])
Residual.__doc__ = """Defect of an equation; ``derivative_form`` is f''.f'(f^-1) - f' (exp-inverse only)."""

InverseEquationCheck = namedtuple('InverseEquationCheck', ['consistent', 'inverse'])
ReciprocalEGFCheck = namedtuple('ReciprocalEGFCheck', ['consistent', 'egf'])


def solve(kind, order, strategy='incremental'):
    """The unique S with S[0] = 0, S[1] = 1 solving ``kind`` through ``order``."""
    if order < 1:
        raise EquationDomainError(f"order must be >= 1, got {order}")
    if strategy not in STRATEGIES:
        raise EquationDomainError(f"unknown strategy {strategy!r}")
    logger.info("solving %s through order %d (%s)", kind, order, strategy)
    if strategy == 'direct':
        return _solve_direct(kind, order)
    if kind.tag == Kind.EXP_INVERSE:
        return _solve_exp_inverse(order)
    return _solve_selfcomp(kind.outer_series(order), order)


def right_hand_side(kind, series):
    """exp(S^-1) or F(S o S), at the order of ``series``."""
    if kind.tag == Kind.EXP_INVERSE:
        return exp_series(revert(series))
    return compose(kind.outer_series(series.order), compose(series, series))


def _solve_direct(kind, order):
    series = TruncatedSeries.identity(order)
    for n in range(1, order):
        rhs = right_hand_side(kind, series.truncate(n))
        series = series.with_coefficient(n + 1, rhs[n] / (n + 1))
        logger.debug("direct: degree %d of %d", n + 1, order)
    return series


def _solve_exp_inverse(order):
    # [y**n] f'(f(y)) = 1/n!, and f'(f) = sum_k (k+1) f[k+1] f**k
    coeffs = [Fraction(0), Fraction(1)]
    powers = PowerTable(1)
    for n in range(1, order):
        total = Fraction(0)
        for k in range(1, n):
            if coeffs[k + 1]:
                total += (k + 1) * coeffs[k + 1] * powers.coefficient(k, n)
        value = (Fraction(1, factorial(n)) - total) / (n + 1)
        coeffs.append(value)
        powers.push(value)
        logger.debug("exp-inverse: degree %d of %d", n + 1, order)
    return TruncatedSeries(coeffs, order)


def _solve_selfcomp(outer, order):
    g = [Fraction(0), outer[0]]
    g_powers = PowerTable(g[1])
    w = [Fraction(0)]
    w_powers = None
    for n in range(1, order):
        w_n = Fraction(0)
        for k in range(1, n + 1):
            if g[k]:
                w_n += g[k] * g_powers.coefficient(k, n)
        w.append(w_n)
        if w_powers is None:
            w_powers = PowerTable(w_n)
        else:
            w_powers.push(w_n)

        total = Fraction(0)
        for j in range(1, n + 1):
            if outer[j]:
                total += outer[j] * w_powers.coefficient(j, n)
        g.append(total / (n + 1))
        g_powers.push(g[n + 1])
        logger.debug("self-composition: degree %d of %d", n + 1, order)
    return TruncatedSeries(g, order)


def _require_invertible(series):
    if series.order < 1 or series[0] or not series[1]:
        raise EquationDomainError("expected a series with S[0] == 0 and S[1] != 0")


def residual(kind, series):
    """Defect of the equation on ``series``, truncated where it is reliable."""
    _require_invertible(series)
    n = series.order
    derivative = differentiate(series)
    primary = derivative - right_hand_side(kind, series).truncate(n - 1)
    derivative_form = None
    if kind.tag == Kind.EXP_INVERSE and n >= 2:
        second = differentiate(derivative)
        inverse = revert(series).truncate(n - 1)
        slope_at_inverse = compose(derivative, inverse).truncate(n - 2)
        derivative_form = second * slope_at_inverse - derivative.truncate(n - 2)
    return Residual(primary, derivative_form)


def inverse_equation_check(order):
    """Solve H' = exp(-H o H) and compare H with the reversion of the exp-inverse solution."""
    minus_exp = exp_series(TruncatedSeries([0, -1], order))
    inverse = solve(EquationKind.general_selfcomp(minus_exp), order)
    expected = revert(solve(EquationKind.exp_inverse(), order))
    return InverseEquationCheck(inverse == expected, inverse)


def negation_conjugacy_check(order):
    """True iff g = -f^-1(-x), with g solving g' = exp(g o g)."""
    g = solve(EquationKind.exp_selfcomp(), order)
    h = revert(solve(EquationKind.exp_inverse(), order))
    return g == -h.negate_argument()


def reciprocal_egf_check(order):
    """1 / exp(g(-x)) against f', with g solving g' = exp(g o g) and f solving f' = exp(f^-1).

    ``egf`` holds the EGF coefficients of exp(g(-x)), which start 1, -1, 2, -7.
    """
    if order < 1:
        raise EquationDomainError(f"order must be >= 1, got {order}")
    g = solve(EquationKind.exp_selfcomp(), order)
    damped = exp_series(g.negate_argument())
    slope = differentiate(solve(EquationKind.exp_inverse(), order))
    return ReciprocalEGFCheck(reciprocal(damped).truncate(order - 1) == slope, damped.egf())


def picard_step_formal(series):
    """S -> integral of exp(S^-1), truncated back to the order of S."""
    _require_invertible(series)
    return antidifferentiate(exp_series(revert(series))).truncate(series.order)


def prefix_agreement(left, right):
    """Largest d with left[0..d] == right[0..d]; -1 when the constant terms differ."""
    agreed = -1
    for a, b in zip(left, right):
        if a != b:
            break
        agreed += 1
    return agreed


def picard_orbit_formal(iterations, order):
    """Formal Picard iterates f_1 = x, f_2, ..., f_iterations with their agreement lengths."""
    if iterations < 1:
        raise EquationDomainError(f"need at least one iterate, got {iterations}")
    solution = solve(EquationKind.exp_inverse(), order)
    iterate = TruncatedSeries.identity(order)
    orbit = []
    for _ in range(iterations):
        orbit.append((iterate, prefix_agreement(iterate, solution)))
        iterate = picard_step_formal(iterate)
    return orbit
