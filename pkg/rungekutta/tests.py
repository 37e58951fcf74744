import math
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from .exceptions import IntegrationError, RungeKuttaError, TableauError
from .integrator import (
    IVPSystem,
    benchmark_exact,
    benchmark_table,
    displayed,
    empirical_order,
    global_error,
    plot_points,
    rk4_benchmark,
    rk_integrate,
)
from .tableau import TABLEAUS, ButcherTableau, classical_rk4, get_tableau

BENCHMARK_V = [0, 0.205, 0.42, 0.645, 0.88, 1.125, 1.38, 1.645, 1.92, 2.205, 2.5]


class TableauTests(SimpleTestCase):

    def test_classical_rk4(self):
        tab = classical_rk4()
        self.assertEqual(tab.stages, 4)
        self.assertEqual(tab.c, (0, Fraction(1, 2), Fraction(1, 2), 1))
        self.assertEqual(tab.b, (Fraction(1, 6), Fraction(1, 3), Fraction(1, 3), Fraction(1, 6)))
        self.assertEqual(sum(tab.b), 1)
        self.assertEqual(tab.a[3], (0, 0, 1, 0))

    def test_catalogue_is_valid(self):
        for name in TABLEAUS:
            with self.subTest(method=name):
                tab = get_tableau(name)
                self.assertEqual(tab.name, name)
                self.assertEqual(tab.c[0], 0)

    def test_unknown_method(self):
        with self.assertRaises(TableauError):
            get_tableau('rk5')

    def test_rejects_bad_row_sum(self):
        with self.assertRaises(TableauError):
            ButcherTableau(a=((), (Fraction(1, 2),)), b=(0, 1), c=(0, Fraction(1, 3)))

    def test_rejects_implicit(self):
        with self.assertRaises(TableauError):
            ButcherTableau(a=((Fraction(1, 2), 0), (0, Fraction(1, 2))), b=(Fraction(1, 2),) * 2,
                           c=(Fraction(1, 2), Fraction(1, 2)))

    def test_rejects_inconsistent_weights(self):
        with self.assertRaises(TableauError):
            ButcherTableau(a=((), (1,)), b=(Fraction(1, 2), Fraction(1, 3)), c=(0, 1))


class IntegrateTests(SimpleTestCase):

    def setUp(self):
        self.rk4 = classical_rk4()

    def test_constant(self):
        states = rk_integrate(self.rk4, IVPSystem(lambda t, y: np.zeros_like(y), (7.0,)), 0.1, 10)
        self.assertEqual(len(states), 11)
        self.assertTrue(all(y[0] == 7.0 for _, y in states))

    def test_unit_slope(self):
        states = rk_integrate(self.rk4, IVPSystem(lambda t, y: np.ones_like(y), (0.0,)), 0.1, 10)
        t, y = states[-1]
        self.assertEqual(t, 1.0)
        self.assertAlmostEqual(y[0], 1.0, delta=1e-15)

    def test_exponential(self):
        self.assertLess(global_error(self.rk4, 0.1), 3e-6)
        ratio = global_error(self.rk4, 0.1) / global_error(self.rk4, 0.05)
        self.assertAlmostEqual(ratio, 16, delta=1.5)

    def test_empirical_order(self):
        order = empirical_order(self.rk4)
        self.assertGreaterEqual(order, 3.7)
        self.assertLessEqual(order, 4.3)

    def test_catalogue_orders(self):
        expected = {'euler': 1, 'midpoint': 2, 'heun3': 3, 'rk4': 4, 'rk38': 4}
        for name, p in expected.items():
            with self.subTest(method=name):
                self.assertAlmostEqual(empirical_order(get_tableau(name), h=0.05), p, delta=0.3)

    def test_quartic_is_exact(self):
        system = IVPSystem(lambda t, y: np.array([4 * t ** 3 - 3 * t ** 2 + 1]), (0.5,))
        for t, y in rk_integrate(self.rk4, system, 0.25, 8):
            self.assertAlmostEqual(y[0], t ** 4 - t ** 3 + t + 0.5, delta=1e-12)

    def test_non_finite_rhs(self):
        system = IVPSystem(lambda t, y: np.array([1.0 / (0.35 - t) if t < 0.3 else math.inf]), (0.0,))
        with self.assertRaises(IntegrationError) as ctx:
            rk_integrate(self.rk4, system, 0.1, 10)
        self.assertGreaterEqual(ctx.exception.t, 0.3)

    def test_bad_step(self):
        system = IVPSystem(lambda t, y: y, (1.0,))
        with self.assertRaises(RungeKuttaError):
            rk_integrate(self.rk4, system, 0.0, 10)

    def test_deterministic(self):
        system = IVPSystem(lambda t, y: np.array([y[1], -y[0]]), (1.0, 0.0))
        first = rk_integrate(self.rk4, system, 0.1, 50)
        second = rk_integrate(self.rk4, system, 0.1, 50)
        for (t1, y1), (t2, y2) in zip(first, second):
            self.assertEqual(t1, t2)
            np.testing.assert_array_equal(y1, y2)


class BenchmarkTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.table = rk4_benchmark()

    def test_columns(self):
        self.assertEqual(list(self.table.columns), ['step', 't', 'v', 'w'])
        self.assertEqual(len(self.table), 11)

    def test_displayed_rows(self):
        shown = displayed(self.table)
        for row, expected in zip(shown.itertuples(), BENCHMARK_V):
            with self.subTest(step=row.step):
                self.assertAlmostEqual(row.t, row.step / 10, places=12)
                self.assertAlmostEqual(row.v, expected, places=9)

    def test_exact_solution(self):
        residual = np.abs(self.table['v'] - benchmark_exact(self.table['t']))
        self.assertLessEqual(residual.max(), 1e-12)
        self.assertAlmostEqual(self.table['w'].iloc[-1], 3.0, delta=1e-12)

    def test_plot_points(self):
        lines = plot_points(self.table).splitlines()
        self.assertEqual(len(lines), 11)
        self.assertEqual(lines[0], '0.0 0.0')

    def test_other_method(self):
        table = benchmark_table(get_tableau('euler'))
        self.assertEqual(table['v'].iloc[1], 0.2)
