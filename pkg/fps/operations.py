import logging
from fractions import Fraction
from math import comb, factorial

from .exceptions import (
    CompositionDomainError,
    ExpDomainError,
    NonInvertibleSeriesError,
    ReciprocalDomainError,
    SeriesError,
)
from .powers import PowerTable
from .series import TruncatedSeries, _check_orders, multiply

logger = logging.getLogger(__name__)


def compose(outer, inner):
    """outer(inner(x)) truncated at the common order, by Horner's rule."""
    _check_orders(outer, inner)
    if inner[0]:
        raise CompositionDomainError(
            f"inner series has constant term {inner[0]}; composition needs 0"
        )
    n = outer.order
    result = TruncatedSeries.constant(outer[n], n)
    for k in range(n - 1, -1, -1):
        result = multiply(result, inner) + outer[k]
    return result


def revert(series):
    """Compositional inverse R with series(R(x)) = R(series(x)) = x.

    Solved degree by degree: for k >= 2 the coefficient of x**k in
    series(R) is S[1]*R[k] plus terms in R[1..k-1] only.
    """
    if series.order < 1 or series[0] or not series[1]:
        raise NonInvertibleSeriesError(
            "reversion needs S[0] == 0 and S[1] != 0"
        )
    n = series.order
    lead = 1 / series[1]
    coeffs = [Fraction(0), lead]
    powers = PowerTable(lead)
    for k in range(2, n + 1):
        total = Fraction(0)
        for j in range(2, k + 1):
            if series[j]:
                total += series[j] * powers.coefficient(j, k)
        value = -total * lead
        coeffs.append(value)
        powers.push(value)
        logger.debug("revert: degree %d of %d", k, n)
    return TruncatedSeries(coeffs, n)


def lagrange_revert(series):
    """Compositional inverse from [x**n] R = (1/n) [x**(n-1)] (x/S)**n."""
    if series.order < 1 or series[0] or not series[1]:
        raise NonInvertibleSeriesError(
            "reversion needs S[0] == 0 and S[1] != 0"
        )
    n = series.order
    quotient = TruncatedSeries(series.coeffs[1:], n - 1)
    base = reciprocal(quotient)
    power = TruncatedSeries.constant(1, n - 1)
    coeffs = [Fraction(0)]
    for k in range(1, n + 1):
        power = multiply(power, base)
        coeffs.append(power[k - 1] / k)
    return TruncatedSeries(coeffs, n)


def reciprocal(series):
    """1/S for S[0] != 0."""
    if not series[0]:
        raise ReciprocalDomainError("1/S needs a nonzero constant term")
    inv = 1 / series[0]
    coeffs = [inv]
    for n in range(1, series.order + 1):
        total = Fraction(0)
        for j in range(1, n + 1):
            if series[j]:
                total += series[j] * coeffs[n - j]
        coeffs.append(-total * inv)
    return TruncatedSeries(coeffs, series.order)


def exp_series(series):
    """exp(S) for S[0] == 0, from E' = S'E with E[0] = 1."""
    if series[0]:
        raise ExpDomainError(f"exp needs a zero constant term, got {series[0]}")
    coeffs = [Fraction(1)]
    for n in range(1, series.order + 1):
        total = Fraction(0)
        for j in range(1, n + 1):
            if series[j]:
                total += j * series[j] * coeffs[n - j]
        coeffs.append(total / n)
    return TruncatedSeries(coeffs, series.order)


def bell_exp_series(series):
    """exp(S) through complete Bell polynomials of the EGF coefficients of S."""
    if series[0]:
        raise ExpDomainError(f"exp needs a zero constant term, got {series[0]}")
    x = series.egf()
    bell = [Fraction(1)]
    for n in range(series.order):
        bell.append(sum(comb(n, i) * bell[n - i] * x[i + 1] for i in range(n + 1)))
    return TruncatedSeries([b / factorial(k) for k, b in enumerate(bell)], series.order)


def differentiate(series):
    if series.order < 1:
        raise SeriesError("differentiation needs order >= 1")
    return TruncatedSeries(
        [k * series[k] for k in range(1, series.order + 1)], series.order - 1
    )


def antidifferentiate(series):
    """Antiderivative with zero constant term, one order higher."""
    return TruncatedSeries(
        [0] + [c / (k + 1) for k, c in enumerate(series)], series.order + 1
    )
