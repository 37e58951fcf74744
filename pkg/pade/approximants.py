import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Tuple

from fps.exceptions import SeriesError
from fps.operations import reciprocal
from fps.serializers import format_rational, parse_rational
from fps.series import TruncatedSeries, multiply

from .exceptions import DegeneratePadeError, PadeError, PoleError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RationalFunction:
    """P(x)/Q(x) with exact coefficients, lowest degree first, and Q(0) = 1."""
    numerator: Tuple[Fraction, ...]
    denominator: Tuple[Fraction, ...]

    def __post_init__(self):
        num = tuple(Fraction(c) for c in self.numerator) or (Fraction(0),)
        den = tuple(Fraction(c) for c in self.denominator) or (Fraction(1),)
        if den[0] != 1:
            raise PadeError(f"denominator must have constant term 1, got {den[0]}")
        object.__setattr__(self, 'numerator', num)
        object.__setattr__(self, 'denominator', den)

    @property
    def L(self):
        return len(self.numerator) - 1

    @property
    def M(self):
        return len(self.denominator) - 1

    def __call__(self, x):
        return eval_rational(self, x)

    def to_dict(self):
        return {
            'num': [format_rational(c) for c in self.numerator],
            'den': [format_rational(c) for c in self.denominator],
            'L': self.L,
            'M': self.M,
        }

    @classmethod
    def from_dict(cls, data):
        try:
            return cls([parse_rational(c) for c in data['num']],
                       [parse_rational(c) for c in data['den']])
        except (KeyError, TypeError) as exc:
            raise PadeError("rational function JSON needs 'num' and 'den'") from exc

    def __str__(self):
        return f"({_poly_str(self.numerator)}) / ({_poly_str(self.denominator)})"


def _poly_str(coeffs):
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0:
            terms.append(format_rational(c))
        else:
            power = 'x' if k == 1 else f'x^{k}'
            terms.append(power if c == 1 else f"{format_rational(c)}*{power}")
    return ' + '.join(terms) or '0'


def _integer_row(row):
    scale = lcm(*(c.denominator for c in row))
    return [int(c * scale) for c in row]


def _bareiss_solve(rows):
    """Solve the square system given as augmented rows [A | b] of Fractions.

    Elimination runs on integers scaled from each row; every division in the
    Bareiss update is exact. Returns None if A is singular.
    """
    m = [_integer_row(row) for row in rows]
    n = len(m)
    previous = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k]), None)
        if pivot is None:
            return None
        m[k], m[pivot] = m[pivot], m[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
            m[i][k] = 0
        previous = m[k][k]
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        total = m[i][n] - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = Fraction(total, 1) / m[i][i]
    return x


def pade(series, L, M):
    """[L/M] approximant P/Q of ``series``: Q*S - P vanishes through degree L + M."""
    if L < 0 or M < 0:
        raise PadeError(f"degrees must be non-negative, got L={L}, M={M}")
    if series.order < L + M:
        raise PadeError(f"[{L}/{M}] needs a series of order {L + M}, got {series.order}")

    def c(k):
        return series[k] if k >= 0 else Fraction(0)

    q = [Fraction(1)]
    if M:
        rows = [[c(k - j) for j in range(1, M + 1)] + [-c(k)] for k in range(L + 1, L + M + 1)]
        solution = _bareiss_solve(rows)
        if solution is None:
            raise DegeneratePadeError(L, M)
        q += solution
    p = [sum((q[j] * c(k - j) for j in range(min(k, M) + 1)), Fraction(0)) for k in range(L + 1)]
    logger.debug("pade: [%d/%d] solved", L, M)
    return RationalFunction(p, q)


def _horner(coeffs, x):
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def eval_rational(R, x):
    x = Fraction(x)
    den = _horner(R.denominator, x)
    if not den:
        raise PoleError(f"denominator vanishes at x = {x}")
    return _horner(R.numerator, x) / den


def expand(R, order):
    """Power series of P/Q through degree ``order``."""
    num = TruncatedSeries(R.numerator[:order + 1], order)
    den = TruncatedSeries(R.denominator[:order + 1], order)
    return multiply(num, reciprocal(den))


def congruence_defect(series, R):
    """Coefficients 0..L+M of Q*S - P; all zero for a genuine approximant."""
    n = R.L + R.M
    if series.order < n:
        raise SeriesError(f"congruence through degree {n} needs order {n}, got {series.order}")
    s = series.truncate(n)
    q = TruncatedSeries(R.denominator, n)
    p = TruncatedSeries(R.numerator, n)
    return list((multiply(q, s) - p).coeffs)
