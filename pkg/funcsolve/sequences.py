import math
from dataclasses import dataclass
from typing import Optional, Tuple
from fractions import Fraction

from fps.serializers import format_rational


@dataclass(frozen=True)
class SequenceReport:
    """Integer and diagnostic sequences derived from the coefficients a_n of a series.

    c[n] = (-1)**n * n! * a[n] when that is an integer, else None.
    root_test[n] = |a[n]|**(-1/n) for n >= 1 and a[n] != 0, else None.
    """
    a: Tuple[Fraction, ...]
    c: Tuple[Optional[int], ...]
    egf: Tuple[Fraction, ...]
    root_test: Tuple[Optional[float], ...]
    integral: Tuple[bool, ...]

    def rows(self):
        return [
            {
                'n': n,
                'a': format_rational(self.a[n]),
                'c': None if self.c[n] is None else str(self.c[n]),
                'egf': format_rational(self.egf[n]),
                'root_test': self.root_test[n],
                'integral': self.integral[n],
            }
            for n in range(len(self.a))
        ]

    def non_integral(self, start=0):
        return [n for n in range(start, len(self.a)) if not self.integral[n]]


def _root_test(value, n):
    if n < 1 or not value:
        return None
    # math.log accepts integers of any size, so huge rationals never overflow
    log_abs = math.log(abs(value.numerator)) - math.log(value.denominator)
    return math.exp(-log_abs / n)


def sequence_report(series):
    a = tuple(series.coeffs)
    egf = series.egf()
    integral = tuple(v.denominator == 1 for v in egf)
    c = tuple(
        (-1) ** n * v.numerator if ok else None
        for n, (v, ok) in enumerate(zip(egf, integral))
    )
    root_test = tuple(_root_test(v, n) for n, v in enumerate(a))
    return SequenceReport(a=a, c=c, egf=egf, root_test=root_test, integral=integral)


def divergence_evidence(report, step=10):
    """Root-test samples at n = step, 2*step, ...; checks strict decrease and halving."""
    samples = [
        (n, report.root_test[n])
        for n in range(step, len(report.a), step)
        if report.root_test[n] is not None
    ]
    values = [v for _, v in samples]
    decreasing = all(later < earlier for earlier, later in zip(values, values[1:]))
    halved = len(values) >= 2 and values[-1] < values[0] / 2
    return samples, decreasing, halved
