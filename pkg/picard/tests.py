import math

import numpy as np
from django.test import SimpleTestCase

from .diagnostics import (
    closed_form_errors,
    closed_form_f2,
    closed_form_f3,
    closed_form_f4,
    convexity_ok,
    dominates_identity,
    expansion_ok,
    refinement_ratio,
    second_derivative_at_zero,
)
from .exceptions import GridDomainError, GridRangeError
from .grid import GridFunction, invert, invert_many
from .iteration import (
    check_interleaving,
    contraction_check,
    phi,
    picard_step,
    run_orbit,
    weighted_phi,
)


class GridFunctionTests(SimpleTestCase):

    def test_identity_grid(self):
        f = GridFunction.identity(1.0, 10)
        self.assertEqual(f.m, 10)
        self.assertAlmostEqual(f.h, 0.1)
        self.assertEqual(f.violations(), [])
        self.assertAlmostEqual(f(0.55), 0.55)

    def test_values_are_read_only(self):
        f = GridFunction.identity(1.0, 10)
        with self.assertRaises(ValueError):
            f.values[3] = 7.0

    def test_violations(self):
        self.assertTrue(GridFunction(1.0, [0.1, 0.5, 1.0]).violations())
        self.assertTrue(GridFunction(1.0, [0.0, 0.5, 0.5]).violations())
        self.assertTrue(GridFunction(1.0, [0.0, 0.2, 1.0]).violations())
        with self.assertRaises(GridDomainError):
            GridFunction(1.0, [0.0, 0.2, 1.0]).validate()

    def test_bad_construction(self):
        with self.assertRaises(GridDomainError):
            GridFunction(0.0, [0.0, 1.0])
        with self.assertRaises(GridDomainError):
            GridFunction(1.0, [0.0])

    def test_non_finite_construction(self):
        for values in ([0.0, math.nan, 1.0], [0.0, 0.5, math.inf]):
            with self.subTest(values=values), self.assertRaises(GridDomainError):
                GridFunction(1.0, values)
        for xmax in (math.nan, math.inf):
            with self.subTest(xmax=xmax), self.assertRaises(GridDomainError):
                GridFunction(xmax, [0.0, 1.0])

    def test_evaluation_range(self):
        with self.assertRaises(GridRangeError):
            GridFunction.identity(1.0, 10)(1.5)


class InvertTests(SimpleTestCase):

    def test_identity(self):
        self.assertAlmostEqual(invert(GridFunction.identity(1.0, 100), 0.5), 0.5, places=15)

    def test_exp_minus_one(self):
        f = GridFunction.from_function(closed_form_f2, 1.0, 1000)
        self.assertAlmostEqual(invert(f, math.e - 1), 1.0, delta=1e-6)
        self.assertAlmostEqual(invert(f, 0.5), math.log(1.5), delta=1e-6)

    def test_nodes_round_trip_exactly(self):
        f = GridFunction.from_function(closed_form_f3, 2.0, 50)
        np.testing.assert_array_equal(invert_many(f, f.values), f.nodes)

    def test_forward_residual(self):
        f = GridFunction.from_function(closed_form_f4, 1.0, 200)
        targets = np.linspace(0.0, f.values[-1], 777)
        back = np.interp(invert_many(f, targets), f.nodes, f.values)
        self.assertTrue(np.all(np.abs(back - targets) <= 1e-14 * np.maximum(1.0, targets)))

    def test_range(self):
        f = GridFunction.identity(1.0, 10)
        with self.assertRaises(GridRangeError):
            invert(f, -0.1)
        with self.assertRaises(GridRangeError):
            invert(f, 1.1)

    def test_non_finite_target(self):
        f = GridFunction.identity(1.0, 10)
        for target in (math.nan, math.inf, -math.inf):
            with self.subTest(target=target), self.assertRaises(GridRangeError):
                invert(f, target)
        with self.assertRaises(GridRangeError):
            invert_many(f, [0.2, math.nan])


class PicardStepTests(SimpleTestCase):

    def test_first_step(self):
        f2 = picard_step(GridFunction.identity(1.0, 1000))
        self.assertAlmostEqual(f2(1.0), math.e - 1, delta=1e-6)

    def test_second_step(self):
        f3 = picard_step(GridFunction.from_function(closed_form_f2, 1.0, 1000))
        self.assertAlmostEqual(f3(1.0), 1.5, delta=5e-4)

    def test_third_step(self):
        f4 = picard_step(GridFunction.from_function(closed_form_f3, 1.0, 1000))
        root = math.sqrt(3) - 1
        self.assertAlmostEqual(f4(1.0), math.exp(root) * root, delta=5e-4)

    def test_closed_forms_along_orbit(self):
        orbit = run_orbit(4, 1.0, 1000)
        for n, error in closed_form_errors(orbit.iterates).items():
            with self.subTest(iterate=n):
                self.assertLessEqual(error, 5e-4)

    def test_rejects_invalid_input(self):
        with self.assertRaises(GridDomainError):
            picard_step(GridFunction(1.0, [0.0, 0.2, 0.9]))


class PhiTests(SimpleTestCase):

    def setUp(self):
        self.identity = GridFunction.identity(1.0, 1000)
        self.f3 = GridFunction.from_function(closed_form_f3, 1.0, 1000)

    def test_self_distance(self):
        self.assertEqual(phi(self.f3, self.f3, 1.0), 0.0)
        self.assertEqual(weighted_phi(self.f3, self.f3, 1.0), 0.0)

    def test_quadratic_gap(self):
        self.assertAlmostEqual(phi(self.identity, self.f3, 1.0), 1 / 6, delta=1e-6)

    def test_symmetric(self):
        self.assertEqual(phi(self.identity, self.f3, 0.7), phi(self.f3, self.identity, 0.7))

    def test_off_node_upper_limit(self):
        self.assertAlmostEqual(phi(self.identity, self.f3, 0.5005), 0.5005 ** 3 / 6, delta=1e-6)

    def test_range_and_grid(self):
        with self.assertRaises(GridRangeError):
            phi(self.identity, self.f3, 1.5)
        with self.assertRaises(GridRangeError):
            phi(self.identity, self.f3, 0.0)
        with self.assertRaises(GridDomainError):
            phi(self.identity, GridFunction.identity(1.0, 10), 1.0)


class OrbitTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.orbit = run_orbit(8, 1.0, 2000)

    def test_values_at_one(self):
        orbit = run_orbit(4, 1.0, 1000)
        f1, f2, f3, f4 = (f(1.0) for f in orbit.iterates)
        self.assertEqual(f1, 1.0)
        self.assertAlmostEqual(f3, 1.5, delta=5e-4)
        self.assertAlmostEqual(f4, 1.522, delta=1e-3)
        self.assertAlmostEqual(f2, math.e - 1, delta=1e-6)
        self.assertTrue(f1 <= f3 <= f4 <= f2)
        self.assertAlmostEqual(orbit.gaps[0], math.e - 2, delta=1e-6)

    def test_two_iterates(self):
        orbit = run_orbit(2, 1.0, 100)
        self.assertEqual(len(orbit.iterates), 2)
        self.assertEqual(len(orbit.gaps), 1)
        self.assertEqual(orbit.phi_checks, ())

    def test_interleaving(self):
        self.assertTrue(self.orbit.interleaving_ok, self.orbit.violations)

    def test_interleaving_violation_is_reported(self):
        f1 = GridFunction.identity(1.0, 100)
        f2 = picard_step(f1)
        violations = check_interleaving([f1, f2, f2, f1])
        self.assertTrue(violations)

    def test_gaps_decrease(self):
        gaps = self.orbit.gaps
        self.assertEqual(len(gaps), 4)
        for earlier, later in zip(gaps, gaps[1:]):
            self.assertLess(later, earlier)
        self.assertTrue(all(g >= 0 for g in gaps))

    def test_contraction(self):
        rows = contraction_check(self.orbit, 1.0)
        self.assertEqual(len(rows), 6)
        self.assertTrue(all(row.ok for row in rows), rows)
        self.assertEqual([(r.lhs, r.rhs) for r in rows], list(self.orbit.phi_checks))

    def test_contraction_first_pair(self):
        first = contraction_check(self.orbit, 1.0)[0]
        self.assertEqual(first.n, 1)
        self.assertLessEqual(first.lhs, first.rhs)

    def test_contraction_needs_four_iterates(self):
        with self.assertRaises(GridDomainError):
            contraction_check(run_orbit(3, 1.0, 100), 1.0)

    def test_iterates_dominate_identity_and_expand(self):
        for n, f in enumerate(self.orbit.iterates, start=1):
            with self.subTest(iterate=n):
                self.assertTrue(dominates_identity(f))
                self.assertTrue(expansion_ok(f))
                if n >= 2:
                    self.assertTrue(convexity_ok(f))

    def test_parameters(self):
        self.assertEqual(self.orbit.params(), {'iterations': 8, 'xmax': 1.0, 'grid': 2000})
        with self.assertRaises(GridDomainError):
            run_orbit(1, 1.0, 100)
        with self.assertRaises(GridDomainError):
            run_orbit(4, 1.0, 5)


class RefinementTests(SimpleTestCase):

    def test_second_order_in_grid_spacing(self):
        ratio = refinement_ratio(4, 1.0, 1000)
        self.assertGreaterEqual(ratio, 3.5)
        self.assertLessEqual(ratio, 4.5)

    def test_taylor_curvature_at_zero(self):
        orbit = run_orbit(8, 1.0, 4000)
        self.assertAlmostEqual(second_derivative_at_zero(orbit.iterates[-1]), 1.0, delta=5e-2)
