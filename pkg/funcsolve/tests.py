from fractions import Fraction
from math import factorial

from django.test import SimpleTestCase

from fps.operations import exp_series, revert
from fps.series import TruncatedSeries

from .equations import EquationKind, Kind
from .exceptions import EquationDomainError
from .sequences import divergence_evidence, sequence_report
from .solvers import (
    inverse_equation_check,
    negation_conjugacy_check,
    picard_orbit_formal,
    picard_step_formal,
    prefix_agreement,
    reciprocal_egf_check,
    residual,
    solve,
)

F = Fraction

EXP_INVERSE_13 = [
    F(0), F(1), F(1, 2), F(0), F(1, 24), F(-1, 20), F(13, 180), F(-197, 1680),
    F(2101, 10080), F(-48203, 120960), F(2938057, 3628800), F(-23059441, 13305600),
    F(74408941, 19160064), F(-9409883317, 1037836800),
]

EXP_INVERSE = EquationKind.exp_inverse()
EXP_SELFCOMP = EquationKind.exp_selfcomp()
AFFINE_SELFCOMP = EquationKind.affine_selfcomp()


class EquationKindTests(SimpleTestCase):

    def test_from_tag(self):
        self.assertEqual(EquationKind.from_tag('exp-inverse'), EXP_INVERSE)
        self.assertEqual(EquationKind.from_tag('affine-selfcomp').tag, Kind.AFFINE_SELFCOMP)

    def test_unknown_tag(self):
        with self.assertRaises(EquationDomainError):
            EquationKind.from_tag('logistic')
        with self.assertRaises(EquationDomainError):
            EquationKind.from_tag('general-selfcomp')

    def test_general_kind_needs_unit_constant(self):
        with self.assertRaises(EquationDomainError):
            EquationKind.general_selfcomp(TruncatedSeries([2, 1], 5))
        with self.assertRaises(EquationDomainError):
            EquationKind(Kind.GENERAL_SELFCOMP)

    def test_general_kind_needs_enough_terms(self):
        kind = EquationKind.general_selfcomp(TruncatedSeries([1, 1], 3))
        with self.assertRaises(EquationDomainError):
            solve(kind, 6)


class SolveTests(SimpleTestCase):

    def test_exp_inverse_coefficients(self):
        self.assertEqual(list(solve(EXP_INVERSE, 13)), EXP_INVERSE_13)

    def test_direct_strategy_coefficients(self):
        self.assertEqual(list(solve(EXP_INVERSE, 13, strategy='direct')), EXP_INVERSE_13)

    def test_first_step_is_forced(self):
        self.assertEqual(solve(EXP_INVERSE, 2), TruncatedSeries([0, 1, F(1, 2)]))

    def test_exp_selfcomp_prefix(self):
        self.assertEqual(
            solve(EXP_SELFCOMP, 4),
            TruncatedSeries([0, 1, F(1, 2), F(1, 2), F(2, 3)]),
        )

    def test_affine_selfcomp_prefix(self):
        series = solve(AFFINE_SELFCOMP, 4)
        self.assertEqual(series, TruncatedSeries([0, 1, F(1, 2), F(1, 3), F(7, 24)]))
        self.assertEqual(series.egf()[1:], (1, 1, 2, 7))

    def test_strategies_agree(self):
        general = EquationKind.general_selfcomp(exp_series(TruncatedSeries([0, -1], 12)))
        for kind in (EXP_INVERSE, EXP_SELFCOMP, AFFINE_SELFCOMP, general):
            with self.subTest(kind=str(kind)):
                self.assertEqual(solve(kind, 12), solve(kind, 12, strategy='direct'))

    def test_general_kind_with_exp_matches_exp_selfcomp(self):
        kind = EquationKind.general_selfcomp(exp_series(TruncatedSeries.identity(15)))
        self.assertEqual(solve(kind, 15), solve(EXP_SELFCOMP, 15))

    def test_order_one(self):
        self.assertEqual(solve(EXP_INVERSE, 1), TruncatedSeries.identity(1))

    def test_rejects_bad_arguments(self):
        with self.assertRaises(EquationDomainError):
            solve(EXP_INVERSE, 0)
        with self.assertRaises(EquationDomainError):
            solve(EXP_INVERSE, 5, strategy='newton')


class ResidualTests(SimpleTestCase):

    def test_vanishes_on_exp_inverse_solution(self):
        result = residual(EXP_INVERSE, solve(EXP_INVERSE, 13))
        self.assertTrue(result.primary.is_zero())
        self.assertTrue(result.derivative_form.is_zero())
        self.assertEqual(result.derivative_form.order, 11)

    def test_vanishes_on_selfcomp_solutions(self):
        self.assertTrue(residual(EXP_SELFCOMP, solve(EXP_SELFCOMP, 20)).primary.is_zero())
        self.assertTrue(residual(AFFINE_SELFCOMP, solve(AFFINE_SELFCOMP, 15)).primary.is_zero())
        self.assertIsNone(residual(EXP_SELFCOMP, solve(EXP_SELFCOMP, 5)).derivative_form)

    def test_identity_is_not_a_solution(self):
        result = residual(EXP_INVERSE, TruncatedSeries.identity(3))
        self.assertEqual(result.primary, TruncatedSeries([0, -1, F(-1, 2)]))
        self.assertFalse(result.derivative_form.is_zero())

    def test_domain(self):
        with self.assertRaises(EquationDomainError):
            residual(EXP_INVERSE, TruncatedSeries([0, 0, 1]))
        with self.assertRaises(EquationDomainError):
            residual(EXP_INVERSE, TruncatedSeries([1, 1, 0]))


class InverseSeriesTests(SimpleTestCase):

    def test_reverted_solution_egf(self):
        inverse = revert(solve(EXP_INVERSE, 7))
        self.assertEqual(inverse.egf()[:7], (0, 1, -1, 3, -16, 126, -1333))

    def test_inverse_equation_egf(self):
        consistent, inverse = inverse_equation_check(7)
        self.assertTrue(consistent)
        self.assertEqual(inverse.egf()[:7], (0, 1, -1, 3, -16, 126, -1333))

    def test_inverse_equation_first_step(self):
        _, inverse = inverse_equation_check(2)
        self.assertEqual(inverse, TruncatedSeries([0, 1, F(-1, 2)]))

    def test_inverse_equation_consistent_at_30(self):
        self.assertTrue(inverse_equation_check(30).consistent)

    def test_negation_conjugacy(self):
        for order in (1, 4, 50):
            with self.subTest(order=order):
                self.assertTrue(negation_conjugacy_check(order))

    def test_reciprocal_of_damped_exp_is_slope(self):
        check = reciprocal_egf_check(13)
        self.assertTrue(check.consistent)
        self.assertEqual(check.egf[:4], (1, -1, 2, -7))

    def test_reciprocal_check_orders(self):
        for order in (1, 2, 30):
            with self.subTest(order=order):
                self.assertTrue(reciprocal_egf_check(order).consistent)
        with self.assertRaises(EquationDomainError):
            reciprocal_egf_check(0)


class SequenceReportTests(SimpleTestCase):

    def test_prime_term(self):
        report = sequence_report(solve(EXP_INVERSE, 10))
        self.assertEqual(report.c[10], 2938057)

    def test_small_terms(self):
        report = sequence_report(solve(EXP_INVERSE, 10))
        self.assertEqual(report.c[2:10], (1, 0, 1, 6, 52, 591, 8404, 144609))

    def test_identity_series(self):
        report = sequence_report(TruncatedSeries.identity(5))
        self.assertEqual(report.c, (0, -1, 0, 0, 0, 0))
        self.assertIsNone(report.root_test[0])
        self.assertIsNone(report.root_test[2])
        self.assertEqual(report.root_test[1], 1.0)

    def test_egf_view(self):
        report = sequence_report(solve(EXP_INVERSE, 6))
        self.assertEqual(report.egf, (0, 1, 1, 0, 1, -6, 52))

    def test_non_integral_terms_are_marked(self):
        report = sequence_report(TruncatedSeries([0, 1, F(1, 3)]))
        self.assertEqual(report.c, (0, -1, None))
        self.assertEqual(report.non_integral(), [2])
        row = report.rows()[2]
        self.assertEqual(row, {
            'n': 2, 'a': '1/3', 'c': None, 'egf': '2/3',
            'root_test': report.root_test[2], 'integral': False,
        })

    def test_integrality_through_100(self):
        report = sequence_report(solve(EXP_INVERSE, 100))
        self.assertEqual(report.non_integral(start=2), [])
        self.assertEqual(report.c[3], 0)
        self.assertTrue(all(c >= 0 for c in report.c[2:]))

    def test_selfcomp_egf_is_positive(self):
        egf = solve(EXP_SELFCOMP, 100).egf()
        self.assertEqual(egf[1:7], (1, 1, 3, 16, 126, 1333))
        for n in range(1, 101):
            self.assertEqual(egf[n].denominator, 1)
            self.assertGreater(egf[n], 0)

    def test_divergence_evidence(self):
        report = sequence_report(solve(EXP_INVERSE, 100))
        samples, decreasing, halved = divergence_evidence(report)
        self.assertEqual([n for n, _ in samples], list(range(10, 101, 10)))
        self.assertTrue(decreasing)
        self.assertTrue(halved)
        for _, value in samples:
            self.assertGreater(value, 0)


class FormalPicardTests(SimpleTestCase):

    def test_first_step_is_exp_minus_one(self):
        step = picard_step_formal(TruncatedSeries.identity(8))
        expected = [0] + [F(1, factorial(k)) for k in range(1, 9)]
        self.assertEqual(step, TruncatedSeries(expected))

    def test_second_step_is_quadratic(self):
        f2 = TruncatedSeries([0] + [F(1, factorial(k)) for k in range(1, 11)])
        self.assertEqual(picard_step_formal(f2), TruncatedSeries([0, 1, F(1, 2)], 10))

    def test_solution_is_fixed_point(self):
        for order in (10, 25, 50):
            with self.subTest(order=order):
                solution = solve(EXP_INVERSE, order)
                self.assertEqual(picard_step_formal(solution), solution)

    def test_prefix_stabilizes(self):
        for k, (_, agreement) in enumerate(picard_orbit_formal(20, 22), start=1):
            with self.subTest(iterate=k):
                self.assertGreaterEqual(agreement, k)

    def test_domain(self):
        with self.assertRaises(EquationDomainError):
            picard_step_formal(TruncatedSeries([0, 0, 1]))

    def test_prefix_agreement(self):
        a = TruncatedSeries([0, 1, 2, 3])
        self.assertEqual(prefix_agreement(a, a), 3)
        self.assertEqual(prefix_agreement(a, TruncatedSeries([0, 1, 5, 3])), 1)
        self.assertEqual(prefix_agreement(a, TruncatedSeries([1, 1, 2, 3])), -1)
