"""Verification suites run by `manage.py verify`.

Each suite yields CheckResult rows in a fixed order. Golden data is read from
settings.GOLDEN_DATA_DIR; an unreadable file raises OSError, a readable file
with wrong content fails the check that reads it.
"""
import json
import logging
from collections import namedtuple
from pathlib import Path

import numpy as np
from django.conf import settings
from django.utils.functional import cached_property

from fps.exceptions import SeriesError
from fps.operations import exp_series, revert
from fps.serializers import format_rational, parse_rational
from fps.series import TruncatedSeries
from funcsolve.equations import EquationKind
from funcsolve.sequences import divergence_evidence, sequence_report
from funcsolve.solvers import (
    inverse_equation_check,
    negation_conjugacy_check,
    picard_orbit_formal,
    picard_step_formal,
    reciprocal_egf_check,
    residual,
    solve,
)
from pade.approximants import congruence_defect, pade
from picard.diagnostics import closed_form_errors
from picard.iteration import contraction_check, run_orbit
from rungekutta.integrator import benchmark_exact, displayed, empirical_order, rk4_benchmark
from rungekutta.tableau import classical_rk4

logger = logging.getLogger(__name__)

CheckResult = namedtuple('CheckResult', ['suite', 'name', 'ok', 'detail', 'informational'])
CheckResult.__new__.__defaults__ = (False,)

CLOSED_FORM_TOLERANCE = 5e-4
RK_RESIDUAL_TOLERANCE = 1e-12


class GoldenDataError(ValueError):
    pass


def _rationals(values):
    try:
        return [parse_rational(v) for v in values]
    except SeriesError as exc:
        raise GoldenDataError(str(exc)) from exc


def _first_mismatch(actual, expected):
    for k, (a, e) in enumerate(zip(actual, expected)):
        if a != e:
            return f"index {k}: got {format_rational(a)}, expected {format_rational(e)}"
    if len(actual) != len(expected):
        return f"length {len(actual)}, expected {len(expected)}"
    return None


class VerificationContext:
    """Shared, lazily computed inputs so suites do not repeat expensive work."""

    def __init__(self, golden_dir=None):
        self.golden_dir = Path(golden_dir or settings.GOLDEN_DATA_DIR)

    def golden(self, name):
        path = self.golden_dir / name
        with open(path, encoding='utf-8') as fh:
            try:
                return json.load(fh)
            except json.JSONDecodeError as exc:
                raise GoldenDataError(f"{name}: {exc}") from exc

    @cached_property
    def exp_inverse(self):
        return EquationKind.exp_inverse()

    @cached_property
    def sequence_series(self):
        return solve(self.exp_inverse, settings.SEQUENCE_DEFAULT_ORDER)

    @cached_property
    def orbit(self):
        return run_orbit(settings.PICARD_ITERATIONS, settings.PICARD_XMAX, settings.PICARD_GRID)


def check_coefficients(ctx):
    golden = ctx.golden('exp_inverse_coefficients.json')
    expected = _rationals(golden['coeffs'])
    series = solve(ctx.exp_inverse, len(expected) - 1)
    mismatch = _first_mismatch(list(series), expected)
    yield CheckResult('coefficients', 'exp-inverse coefficients', mismatch is None,
                      mismatch or f"{len(expected)} coefficients agree")

    direct = solve(ctx.exp_inverse, len(expected) - 1, strategy='direct')
    yield CheckResult('coefficients', 'strategies agree', direct == series,
                      'incremental and direct solvers')

    golden = ctx.golden('selfcomp_prefix.json')
    expected = _rationals(golden['coeffs'])
    series = solve(EquationKind.from_tag(golden['kind']), len(expected) - 1)
    mismatch = _first_mismatch(list(series), expected)
    yield CheckResult('coefficients', f"{golden['kind']} prefix", mismatch is None,
                      mismatch or str(series))

    expected = _rationals(golden['egf'])
    egf = solve(EquationKind.from_tag(golden['kind']), len(expected)).egf()[1:]
    mismatch = _first_mismatch(list(egf), expected)
    yield CheckResult('coefficients', f"{golden['kind']} EGF terms", mismatch is None,
                      mismatch or ', '.join(golden['egf']))


def check_sequence(ctx):
    golden = ctx.golden('sequence_values.json')
    report = sequence_report(ctx.sequence_series)
    order = ctx.sequence_series.order
    bad = []
    for n, value in golden['c'].items():
        n = int(n)
        if n <= order and report.c[n] != int(value):
            bad.append(f"c_{n} = {report.c[n]}, expected {value}")
    yield CheckResult('sequence', 'c_n values', not bad, '; '.join(bad) or f"{len(golden['c'])} values agree")

    non_integral = report.non_integral(start=2)
    negative = [n for n in range(2, order + 1) if report.c[n] is not None and report.c[n] < 0]
    ok = not non_integral and not negative
    zeros = [n for n in range(2, order + 1) if report.c[n] == 0]
    detail = (f"c_2..c_{order} nonnegative integers; zero at n = {zeros}" if ok
              else f"non-integral at {non_integral[:5]}, negative at {negative[:5]}")
    yield CheckResult('sequence', 'integrality', ok, detail)

    samples, decreasing, halved = divergence_evidence(report)
    enough = len(samples) >= 2
    yield CheckResult('sequence', 'root-test decrease', enough and decreasing and halved,
                      ', '.join(f"n={n}: {v:.4g}" for n, v in samples))


def check_inverse(ctx):
    golden = ctx.golden('inverse_egf.json')
    expected = _rationals(golden['egf'])
    inverse = revert(solve(ctx.exp_inverse, len(expected) - 1))
    mismatch = _first_mismatch(list(inverse.egf()), expected)
    yield CheckResult('inverse', 'inverse EGF terms', mismatch is None,
                      mismatch or ', '.join(golden['egf']))

    check = inverse_equation_check(settings.SOLVE_DEFAULT_ORDER)
    yield CheckResult('inverse', "H' = exp(-H o H)", check.consistent,
                      f"through order {settings.SOLVE_DEFAULT_ORDER}")


def check_conjugacy(ctx):
    order = 50
    yield CheckResult('conjugacy', 'g(x) = -f^-1(-x)', negation_conjugacy_check(order),
                      f"through order {order}")

    expected = _rationals(ctx.golden('reciprocal_egf.json')['egf'])
    check = reciprocal_egf_check(settings.SOLVE_DEFAULT_ORDER)
    mismatch = _first_mismatch(list(check.egf[:len(expected)]), expected)
    yield CheckResult('conjugacy', 'exp(g(-x)) EGF terms', mismatch is None,
                      mismatch or ', '.join(format_rational(c) for c in expected))
    yield CheckResult('conjugacy', "1 / exp(g(-x)) = f'", check.consistent,
                      f"through order {settings.SOLVE_DEFAULT_ORDER - 1}")


def check_fixed_point(ctx):
    series = solve(ctx.exp_inverse, 50)
    yield CheckResult('fixed-point', 'formal Picard fixed point', picard_step_formal(series) == series,
                      'order 50')
    short = [k for k, (_, agreed) in enumerate(picard_orbit_formal(20, 22), start=1) if agreed < k]
    yield CheckResult('fixed-point', 'prefix stabilization', not short,
                      'iterate k agrees through degree k for k <= 20' if not short
                      else f"iterates {short} agree on fewer terms")


def check_residual(ctx):
    order = settings.SOLVE_DEFAULT_ORDER
    for tag in ('exp-inverse', 'exp-selfcomp', 'affine-selfcomp'):
        kind = EquationKind.from_tag(tag)
        res = residual(kind, solve(kind, order))
        ok = res.primary.is_zero() and (res.derivative_form is None or res.derivative_form.is_zero())
        yield CheckResult('residual', f"{tag} residual", ok, f"order {order}")


def check_picard(ctx):
    orbit = ctx.orbit
    errors = closed_form_errors(orbit.iterates)
    bad = {n: e for n, e in errors.items() if e > CLOSED_FORM_TOLERANCE}
    yield CheckResult('picard', 'closed forms f_2, f_3, f_4', not bad,
                      ', '.join(f"f_{n}: {e:.2e}" for n, e in errors.items()))
    yield CheckResult('picard', 'interleaving', orbit.interleaving_ok,
                      f"{len(orbit.violations)} violations, tolerance {orbit.tolerance:.1e}")
    gaps = orbit.gaps[:3]
    yield CheckResult('picard', 'gaps decrease', all(b < a for a, b in zip(gaps, gaps[1:])),
                      ', '.join(f"{g:.3e}" for g in orbit.gaps))


def check_contraction(ctx):
    rows = contraction_check(ctx.orbit, ctx.orbit.xmax)
    failed = [row.n for row in rows if not row.ok]
    yield CheckResult('contraction', 'Phi contraction', not failed,
                      f"{len(rows)} pairs" if not failed else f"fails for n = {failed}")


def check_rk(ctx):
    golden = ctx.golden('rk_table.json')
    table = rk4_benchmark()
    shown = displayed(table)
    expected = [(float(t), float(v)) for t, v in golden['rows']]
    bad = [
        f"t={t}: v={row.v}, expected {v}"
        for row, (t, v) in zip(shown.itertuples(), expected)
        if abs(row.t - t) > 1e-9 or abs(row.v - v) > 1e-9
    ]
    if len(shown) != len(expected):
        bad.append(f"{len(shown)} rows, expected {len(expected)}")
    yield CheckResult('rk', 'benchmark table', not bad, '; '.join(bad) or f"{len(expected)} rows agree")

    worst = float(np.max(np.abs(table['v'] - benchmark_exact(table['t']))))
    yield CheckResult('rk', 'exact solution', worst <= RK_RESIDUAL_TOLERANCE, f"max residual {worst:.1e}")

    order = empirical_order(classical_rk4())
    yield CheckResult('rk', 'convergence order', 3.7 <= order <= 4.3, f"{order:.3f}")


def check_pade(ctx):
    for n in (1, 2, 3):
        series = solve(ctx.exp_inverse, 2 * n)
        defect = congruence_defect(series, pade(series, n, n))
        yield CheckResult('pade', f"[{n}/{n}] congruence", all(c == 0 for c in defect),
                          f"through degree {2 * n}")
    R = pade(exp_series(TruncatedSeries.identity(2)), 1, 1)
    ok = R.numerator == (1, parse_rational('1/2')) and R.denominator == (1, parse_rational('-1/2'))
    yield CheckResult('pade', 'exp [1/1]', ok, str(R))

    reported = _rationals(ctx.golden('reported_pade.json')['coeffs'])
    ours = pade(solve(ctx.exp_inverse, 6), 3, 3)
    reproduced = list(ours.numerator) == reported
    yield CheckResult('pade', 'reported [3/3] output', True,
                      'reproduced' if reproduced else f"not reproduced; computed {ours}",
                      informational=True)


SUITES = {
    'coefficients': check_coefficients,
    'sequence': check_sequence,
    'inverse': check_inverse,
    'conjugacy': check_conjugacy,
    'fixed-point': check_fixed_point,
    'residual': check_residual,
    'picard': check_picard,
    'contraction': check_contraction,
    'rk': check_rk,
    'pade': check_pade,
}


def run_suite(name, ctx):
    """All results of one suite; malformed golden data becomes a failed check."""
    try:
        return list(SUITES[name](ctx))
    except (GoldenDataError, KeyError, TypeError, ValueError) as exc:
        logger.warning("suite %s could not run: %s", name, exc)
        return [CheckResult(name, 'golden data', False, str(exc))]


def run_checks(only=None):
    ctx = VerificationContext()
    names = [only] if only else list(SUITES)
    results = []
    for name in names:
        results.extend(run_suite(name, ctx))
    return results
