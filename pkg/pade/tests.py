from fractions import Fraction as F

from django.test import SimpleTestCase

from fps.operations import exp_series
from fps.series import TruncatedSeries
from funcsolve.equations import EquationKind
from funcsolve.solvers import solve

from .approximants import RationalFunction, congruence_defect, eval_rational, expand, pade
from .exceptions import DegeneratePadeError, PadeError, PoleError


def exp_to(order):
    return exp_series(TruncatedSeries.identity(order))


class PadeTests(SimpleTestCase):

    def test_exp_one_one(self):
        R = pade(exp_to(2), 1, 1)
        self.assertEqual(R.numerator, (1, F(1, 2)))
        self.assertEqual(R.denominator, (1, F(-1, 2)))
        self.assertEqual(eval_rational(R, 1), 3)

    def test_taylor_when_no_denominator(self):
        S = exp_to(5)
        R = pade(S, 3, 0)
        self.assertEqual(R.numerator, S.coeffs[:4])
        self.assertEqual(R.denominator, (1,))

    def test_constant(self):
        R = pade(exp_to(4), 0, 0)
        self.assertEqual(R.numerator, (1,))
        self.assertEqual((R.L, R.M), (0, 0))

    def test_exp_inverse_two_two(self):
        R = pade(solve(EquationKind.exp_inverse(), 4), 2, 2)
        self.assertEqual(R.numerator, (0, 1, F(2, 3)))
        self.assertEqual(R.denominator, (1, F(1, 6), F(-1, 12)))

    def test_congruence_on_exp_inverse(self):
        kind = EquationKind.exp_inverse()
        for n in (1, 2, 3):
            with self.subTest(L=n, M=n):
                S = solve(kind, 2 * n)
                R = pade(S, n, n)
                self.assertEqual((R.L, R.M), (n, n))
                self.assertEqual(R.denominator[0], 1)
                self.assertTrue(all(c == 0 for c in congruence_defect(S, R)))

    def test_three_three_uses_order_six_prefix(self):
        kind = EquationKind.exp_inverse()
        R = pade(solve(kind, 6), 3, 3)
        self.assertEqual(pade(solve(kind, 13), 3, 3), R)
        self.assertEqual(expand(R, 6), solve(kind, 6))

    def test_unique(self):
        kind = EquationKind.exp_inverse()
        self.assertEqual(pade(solve(kind, 8), 2, 2), pade(solve(kind, 4), 2, 2))

    def test_degenerate(self):
        with self.assertRaises(DegeneratePadeError) as ctx:
            pade(TruncatedSeries([1, 0, 1]), 1, 1)
        self.assertEqual((ctx.exception.L, ctx.exception.M), (1, 1))

    def test_order_too_small(self):
        with self.assertRaises(PadeError):
            pade(exp_to(3), 2, 2)


class RationalFunctionTests(SimpleTestCase):

    def setUp(self):
        self.R = RationalFunction((1, F(1, 2)), (1, F(-1, 2)))

    def test_eval_at_zero(self):
        self.assertEqual(self.R(0), 1)

    def test_pole(self):
        with self.assertRaises(PoleError):
            self.R(2)

    def test_normalization(self):
        with self.assertRaises(PadeError):
            RationalFunction((1,), (2, 1))

    def test_expand(self):
        self.assertEqual(expand(self.R, 3).coeffs, (1, 1, F(1, 2), F(1, 4)))

    def test_json(self):
        data = self.R.to_dict()
        self.assertEqual(data, {'num': ['1', '1/2'], 'den': ['1', '-1/2'], 'L': 1, 'M': 1})
        self.assertEqual(RationalFunction.from_dict(data), self.R)

    def test_str(self):
        self.assertEqual(str(self.R), '(1 + 1/2*x) / (1 + -1/2*x)')
