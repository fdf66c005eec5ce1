import math
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given

from waves.conf import Tolerance
from waves.equations import (
    TwoTermSolution, check_stated_two_term, factored_conditions, mobius_apply, mobius_fixed_points, residual,
    solve_two_term,
)
from waves.exceptions import ArgumentError, DivisionByZeroElementError
from waves.multiplicative import MultWave
from waves.periodic import PeriodicSeq, approx_eq
from waves.polar import direct_sum

from .strategies import rationals

LOOSE = Tolerance(abs_eps=1e-7, rel_eps=1e-7)


def seq(*values):
    return PeriodicSeq.of(values, high=False)


def w(f, g=0):
    return MultWave(Fraction(f), Fraction(g))


class TwoTermTests(SimpleTestCase):
    def test_solution_family(self):
        solution = solve_two_term(Fraction(1, 3), Fraction(1, 4))
        self.assertEqual(solution.member(), w(Fraction(1, 3), Fraction(3, 4)))
        self.assertLess(residual(solution.terms(k=2, l=-1)), 1e-9)

    @given(rationals(), rationals())
    def test_every_member_solves(self, f2, g2):
        solution = solve_two_term(f2, g2)
        self.assertLess(residual(solution.terms(k=1, l=3)), 1e-9)

    def test_stated_constants_diverge(self):
        with self.assertLogs('waves.divergence', level='WARNING') as logs:
            value = check_stated_two_term(Fraction(1, 3), Fraction(1, 4))
        self.assertAlmostEqual(value, 2)
        self.assertIn('residual 2', logs.output[0])

    def test_cosine_factor_vanishes_everywhere(self):
        solution = solve_two_term(Fraction(1, 3), Fraction(1, 4))
        self.assertEqual(solution.vanishing_phases(), (1,))
        self.assertEqual(solution.vanishing_phases(k=1), (1, 2))

    def test_non_solution_has_residual(self):
        self.assertAlmostEqual(residual([(1, w(0)), (1, w(0))]), 2)
        self.assertEqual(TwoTermSolution(0, 0).dg, Fraction(1, 2))


class FactoredTests(SimpleTestCase):
    def test_vanishing_pair(self):
        conditions = factored_conditions([(1, w(0)), (1, w(0, Fraction(1, 2))), (1, w(0, Fraction(1, 4)))])
        self.assertEqual(conditions.vanishing, (3,))
        self.assertAlmostEqual(conditions.residual, 1)

    def test_roots_of_unity_sum_to_zero(self):
        terms = [(1, w(0, Fraction(k, 3))) for k in range(3)]
        conditions = factored_conditions(terms)
        self.assertEqual(conditions.vanishing, (1, 2, 3))
        self.assertLess(conditions.residual, 1e-9)

    def test_left_side_power_matches_sum(self):
        rng = np.random.default_rng(11)
        for n in range(3, 7):
            terms = [
                (complex(rng.uniform(0.5, 2) * np.exp(1j * rng.uniform(-np.pi, np.pi))),
                 w(Fraction(int(rng.integers(0, 3)), 3), Fraction(int(rng.integers(0, 4)), 4)))
                for _ in range(n)
            ]
            conditions = factored_conditions(terms)
            total = direct_sum(terms).to_complex()
            with self.subTest(n=n):
                self.assertEqual(len(conditions.factors), n)
                self.assertTrue(approx_eq(conditions.left_side_power(), PeriodicSeq(total ** n), LOOSE))

    def test_term_bounds(self):
        with self.assertRaises(ArgumentError):
            factored_conditions([(1, w(0)), (1, w(0))])
        with self.assertRaises(ArgumentError):
            factored_conditions([(1, w(0))] * 9)


class MobiusTests(SimpleTestCase):
    def test_reciprocal(self):
        roots = mobius_fixed_points(0, 1, 1, 0)
        self.assertTrue(approx_eq(roots.plus, seq(1)))
        self.assertTrue(approx_eq(roots.minus, seq(-1)))
        self.assertFalse(roots.double_root)
        self.assertEqual(roots.double_phases, ())
        self.assertLess(roots.residual_plus, 1e-12)

    def test_silver_ratio(self):
        roots = mobius_fixed_points(2, 1, 1, 0)
        self.assertAlmostEqual(roots.plus.at(1), 1 + math.sqrt(2))
        self.assertAlmostEqual(roots.minus.at(1), 1 - math.sqrt(2))
        self.assertTrue(approx_eq(mobius_apply(2, 1, 1, 0, roots.plus), roots.plus))

    def test_double_root(self):
        roots = mobius_fixed_points(2, -1, 1, 0)
        self.assertTrue(roots.double_root)
        self.assertEqual(roots.double_phases, (1,))
        self.assertTrue(approx_eq(roots.plus, roots.minus))

    def test_pole_is_reported(self):
        with self.assertLogs('waves.equations', level='WARNING'):
            roots = mobius_fixed_points(1, 0, 1, 0)
        self.assertEqual(roots.poles, (1,))

    def test_sequence_coefficients(self):
        a = seq(0, 2)
        roots = mobius_fixed_points(a, 1, 1, 0)
        self.assertEqual(roots.plus.period, 2)
        self.assertAlmostEqual(roots.plus.at(1), 1)
        self.assertAlmostEqual(roots.plus.at(2), 1 + math.sqrt(2))

    def test_random_plug_back(self):
        rng = np.random.default_rng(5)

        def coefficient(period, low=0.0):
            magnitude = rng.uniform(low, 2.0, period)
            return PeriodicSeq.of(magnitude * np.exp(1j * rng.uniform(-np.pi, np.pi, period)), high=False)

        for _ in range(50):
            period = int(rng.integers(1, 7))
            a, b, d = coefficient(period), coefficient(period), coefficient(period)
            c = coefficient(period, low=0.5)
            roots = mobius_fixed_points(a, b, c, d)
            self.assertLess(roots.residual_plus, 1e-8)
            self.assertLess(roots.residual_minus, 1e-8)

    def test_zero_c(self):
        with self.assertRaises(DivisionByZeroElementError):
            mobius_fixed_points(1, 1, 0, 1)

    def test_double_root_on_some_phases(self):
        roots = mobius_fixed_points(seq(2, 0), seq(-1, 1), 1, 0)
        self.assertEqual(roots.double_phases, (1,))
        self.assertEqual(roots.roots, (roots.plus, roots.minus))
