import random
from fractions import Fraction
from math import factorial

from django.test import SimpleTestCase

from .exceptions import (
    CompositionDomainError,
    ExpDomainError,
    NonInvertibleSeriesError,
    OrderMismatchError,
    ReciprocalDomainError,
    SerializationError,
)
from .operations import (
    antidifferentiate,
    bell_exp_series,
    compose,
    differentiate,
    exp_series,
    lagrange_revert,
    reciprocal,
    revert,
)
from .powers import PowerTable
from .serializers import format_rational, loads_series, dumps, series_from_dict
from .series import TruncatedSeries, linear_combine, multiply

S = TruncatedSeries


def random_rational(rng):
    return Fraction(rng.randint(-100, 100), rng.randint(1, 100))


def random_series(rng, order, valuation=0):
    coeffs = [Fraction(0)] * valuation + [random_rational(rng) for _ in range(order + 1 - valuation)]
    return S(coeffs, order)


def random_invertible(rng, order):
    series = random_series(rng, order, valuation=1)
    while not series[1]:
        series = series.with_coefficient(1, random_rational(rng))
    return series


class TruncatedSeriesTests(SimpleTestCase):

    def test_pads_to_order(self):
        series = S([0, 1], 4)
        self.assertEqual(series.order, 4)
        self.assertEqual(len(series.coeffs), 5)

    def test_rejects_too_many_coefficients(self):
        with self.assertRaises(ValueError):
            S([1, 2, 3], 1)

    def test_valuation(self):
        self.assertEqual(S([0, 0, 3], 4).valuation, 2)
        self.assertEqual(S.zero(3).valuation, 4)

    def test_coefficients_are_canonical(self):
        series = S([Fraction(2, 4), Fraction(-3, -6), Fraction(5, -10)], 2)
        for c in series:
            renormalized = Fraction(c.numerator, c.denominator)
            self.assertEqual((c.numerator, c.denominator), (renormalized.numerator, renormalized.denominator))
            self.assertGreater(c.denominator, 0)

    def test_truncate_never_extends(self):
        with self.assertRaises(ValueError):
            S([1, 2], 1).truncate(3)

    def test_negate_argument_and_egf(self):
        series = S([0, 1, Fraction(1, 2), Fraction(1, 6)], 3)
        self.assertEqual(series.negate_argument(), S([0, -1, Fraction(1, 2), Fraction(-1, 6)], 3))
        self.assertEqual(series.egf(), (0, 1, 1, 1))


class LinearCombineTests(SimpleTestCase):

    def test_cancellation(self):
        series = S([1, 2, 3], 2)
        self.assertTrue(linear_combine(1, series, -1, series).is_zero())

    def test_sum_of_monomials(self):
        self.assertEqual(
            linear_combine(1, S.monomial(1, 3), 1, S.monomial(2, 3)),
            S([0, 1, 1], 3),
        )

    def test_hand_arithmetic(self):
        self.assertEqual(linear_combine(2, S([1, 1]), 3, S([1, -1])), S([5, -1]))

    def test_order_mismatch(self):
        with self.assertRaises(OrderMismatchError):
            linear_combine(1, S([1, 1]), 1, S([1, 1, 1]))


class MultiplyTests(SimpleTestCase):

    def test_difference_of_squares(self):
        self.assertEqual(multiply(S([1, 1], 2), S([1, -1], 2)), S([1, 0, -1]))

    def test_geometric_telescoping(self):
        self.assertEqual(multiply(S([1, 1, 1, 1]), S([1, -1], 3)), S([1], 3))

    def test_matches_naive_convolution(self):
        rng = random.Random(8)
        for _ in range(10):
            a, b = random_series(rng, 8), random_series(rng, 8)
            naive = [Fraction(0)] * 9
            for i in range(9):
                for j in range(9):
                    if i + j <= 8:
                        naive[i + j] += a[i] * b[j]
            self.assertEqual(multiply(a, b), S(naive, 8))

    def test_commutative_and_associative(self):
        rng = random.Random(10)
        for _ in range(10):
            a, b, c = (random_series(rng, 10) for _ in range(3))
            self.assertEqual(multiply(a, b), multiply(b, a))
            self.assertEqual(multiply(multiply(a, b), c), multiply(a, multiply(b, c)))

    def test_order_mismatch(self):
        with self.assertRaises(OrderMismatchError):
            multiply(S([1], 2), S([1], 3))


class ComposeTests(SimpleTestCase):

    def test_identity_inner(self):
        rng = random.Random(1)
        series = random_series(rng, 6)
        self.assertEqual(compose(series, S.identity(6)), series)

    def test_hand_expansion(self):
        self.assertEqual(compose(S([0, 1, 1]), S([0, 2], 2)), S([0, 2, 4]))

    def test_geometric_over_alternating_is_identity(self):
        geometric = S([0] + [1] * 10)
        alternating = S([0] + [(-1) ** (k + 1) for k in range(1, 11)])
        self.assertEqual(compose(geometric, alternating), S.identity(10))

    def test_nonzero_inner_constant(self):
        with self.assertRaises(CompositionDomainError):
            compose(S([1, 1]), S([1, 1]))

    def test_associative(self):
        rng = random.Random(3)
        for _ in range(10):
            a = random_series(rng, 8)
            b = random_series(rng, 8, valuation=1)
            c = random_series(rng, 8, valuation=1)
            self.assertEqual(compose(compose(a, b), c), compose(a, compose(b, c)))


class RevertTests(SimpleTestCase):

    def test_identity(self):
        self.assertEqual(revert(S.identity(5)), S.identity(5))

    def test_catalan_signs(self):
        self.assertEqual(revert(S([0, 1, 1], 4)), S([0, 1, -1, 2, -5]))

    def test_round_trip(self):
        rng = random.Random(12)
        x = S.identity(12)
        for _ in range(100):
            series = random_invertible(rng, 12)
            inverse = revert(series)
            self.assertEqual(compose(series, inverse), x)
            self.assertEqual(compose(inverse, series), x)

    def test_agrees_with_lagrange_inversion(self):
        rng = random.Random(5)
        for _ in range(20):
            series = random_invertible(rng, 10)
            self.assertEqual(revert(series), lagrange_revert(series))

    def test_non_invertible(self):
        for bad in (S([1, 1, 0]), S([0, 0, 1]), S([0], 0)):
            with self.assertRaises(NonInvertibleSeriesError):
                revert(bad)


class ExpSeriesTests(SimpleTestCase):

    def test_exp_of_zero(self):
        self.assertEqual(exp_series(S.zero(4)), S([1], 4))

    def test_exp_of_x(self):
        self.assertEqual(
            exp_series(S.identity(5)),
            S([Fraction(1, factorial(k)) for k in range(6)]),
        )

    def test_hand_expansion(self):
        self.assertEqual(
            exp_series(S([0, 1, 1])).truncate(2),
            S([1, 1, Fraction(3, 2)]),
        )
        self.assertEqual(exp_series(S([0, 1, 1, 0])), S([1, 1, Fraction(3, 2), Fraction(7, 6)]))

    def test_domain(self):
        with self.assertRaises(ExpDomainError):
            exp_series(S([1, 1]))
        with self.assertRaises(ExpDomainError):
            bell_exp_series(S([1, 1]))

    def test_bell_polynomials_agree(self):
        rng = random.Random(36040)
        for _ in range(20):
            series = random_series(rng, 9, valuation=1)
            self.assertEqual(exp_series(series), bell_exp_series(series))

    def test_homomorphism(self):
        rng = random.Random(2)
        for _ in range(20):
            a = random_series(rng, 9, valuation=1)
            b = random_series(rng, 9, valuation=1)
            self.assertEqual(exp_series(a + b), multiply(exp_series(a), exp_series(b)))

    def test_derivative_identity(self):
        rng = random.Random(4)
        for _ in range(20):
            series = random_series(rng, 9, valuation=1)
            self.assertEqual(
                differentiate(exp_series(series)),
                multiply(differentiate(series), exp_series(series).truncate(8)),
            )


class CalculusTests(SimpleTestCase):

    def test_differentiate(self):
        self.assertEqual(differentiate(S([0, 1, Fraction(1, 2)])), S([1, 1]))
        self.assertTrue(differentiate(S([7], 3)).is_zero())

    def test_differentiate_solution_prefix(self):
        prefix = S([0, 1, Fraction(1, 2), 0, Fraction(1, 24), Fraction(-1, 20)])
        self.assertEqual(differentiate(prefix), S([1, 1, 0, Fraction(1, 6), Fraction(-1, 4)]))

    def test_antidifferentiate(self):
        self.assertEqual(antidifferentiate(S([1], 0)), S([0, 1]))
        self.assertEqual(antidifferentiate(S([1, 1])), S([0, 1, Fraction(1, 2)]))

    def test_round_trip(self):
        rng = random.Random(7)
        for _ in range(20):
            series = random_series(rng, 8)
            self.assertEqual(antidifferentiate(differentiate(series)), series - series[0])

    def test_reciprocal(self):
        self.assertEqual(reciprocal(S([1, -1], 4)), S([1, 1, 1, 1, 1]))
        with self.assertRaises(ReciprocalDomainError):
            reciprocal(S([0, 1]))


class PowerTableTests(SimpleTestCase):

    def test_matches_repeated_multiplication(self):
        base = S([0, 2, -1, Fraction(1, 3), 5, 0, Fraction(-7, 2)])
        table = PowerTable(base[1])
        for c in base.coeffs[2:]:
            table.push(c)
        power = S.constant(1, 6)
        for k in range(7):
            for n in range(7):
                self.assertEqual(table.coefficient(k, n), power[n])
            power = multiply(power, base)

    def test_refuses_unknown_coefficients(self):
        table = PowerTable(1)
        with self.assertRaises(ValueError):
            table.coefficient(1, 3)


class SerializerTests(SimpleTestCase):

    def test_canonical_strings(self):
        self.assertEqual(format_rational(Fraction(6, -4)), "-3/2")
        self.assertEqual(format_rational(Fraction(4, 2)), "2")
        self.assertEqual(format_rational(0), "0")

    def test_series_json(self):
        series = S([0, 1, Fraction(1, 2), 0, Fraction(1, 24)])
        text = dumps(series)
        self.assertIn('"1/24"', text)
        self.assertEqual(loads_series(text), series)

    def test_malformed(self):
        with self.assertRaises(SerializationError):
            series_from_dict({'order': 2, 'coeffs': ['0', '1']})
        with self.assertRaises(SerializationError):
            series_from_dict({'order': 1, 'coeffs': ['0', 'one']})
        with self.assertRaises(SerializationError):
            loads_series('{')
