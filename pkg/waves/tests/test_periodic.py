import math

import numpy as np
from django.test import SimpleTestCase
from hypothesis import assume, given, strategies as st

from waves.conf import Tolerance, use_precision
from waves.exceptions import ArgumentError, DivisionByZeroElementError
from waves.multiplicative import MultWave, mw_sample
from waves.periodic import (
    PeriodicSeq, align, approx_eq, compose_rotations, conj, dilate, ew_product, ew_quotient, ew_sum, inverse, norm,
    orth_conj, reduce_period, root_n, rotate, sum_over_period, translate,
)

from .strategies import mult_waves, periodic_seqs


def seq(*values):
    return PeriodicSeq.of(values, high=False)


class PeriodicSeqTests(SimpleTestCase):
    def test_extension_rule(self):
        s = seq(1, 2, 3)
        self.assertEqual(s.at(1), 1)
        self.assertEqual(s.at(4), 1)
        self.assertEqual(s.at(0), 3)
        self.assertEqual(s.at(-1), 2)

    def test_values_are_read_only(self):
        s = seq(1, 2)
        with self.assertRaises(ValueError):
            s.values[0] = 5

    def test_empty_rejected(self):
        with self.assertRaises(ArgumentError):
            PeriodicSeq.of([])

    def test_extend(self):
        self.assertEqual(seq(1, 2).extend(6).to_complex().tolist(), [1, 2, 1, 2, 1, 2])
        with self.assertRaises(ArgumentError):
            seq(1, 2).extend(5)

    def test_operators_follow_combined_period(self):
        total = seq(1, 2) + seq(10, 20, 30)
        self.assertEqual(total.period, 6)
        self.assertEqual(total.to_complex().tolist(), [11, 22, 31, 12, 21, 32])
        self.assertEqual((seq(1, 2) * 3).to_complex().tolist(), [3, 6])
        self.assertEqual((1 - seq(1, 2)).to_complex().tolist(), [0, -1])
        self.assertEqual((-seq(1j)).to_complex().tolist(), [-1j])

    def test_quotient_by_zero_names_phase(self):
        with self.assertRaises(DivisionByZeroElementError) as ctx:
            ew_quotient(seq(1, 1, 1), seq(2, 0, 1))
        self.assertEqual(ctx.exception.xi, 2)

    def test_quotient_uses_tolerance(self):
        with self.assertRaises(DivisionByZeroElementError):
            ew_quotient(seq(1), seq(1e-6), Tolerance(abs_eps=1e-3))
        self.assertTrue(approx_eq(ew_quotient(seq(1), seq(1e-6), Tolerance(abs_eps=0)), seq(1e6)))

    def test_conjugates(self):
        self.assertEqual(conj(seq(1 + 2j)).to_complex().tolist(), [1 - 2j])
        self.assertEqual(orth_conj(seq(1 + 2j)).to_complex().tolist(), [-1 + 2j])

    def test_root_n(self):
        self.assertTrue(approx_eq(root_n(seq(-1), 2), seq(1j)))
        self.assertEqual(root_n(seq(0), 3).to_complex().tolist(), [0])
        with self.assertRaises(ArgumentError):
            root_n(seq(1), 0)

    def test_inverse(self):
        a = seq(2, 1j, -4 + 3j)
        self.assertTrue(approx_eq(ew_product(a, inverse(a)), seq(1)))
        with self.assertRaises(DivisionByZeroElementError):
            inverse(seq(1, 0))

    def test_rotate(self):
        self.assertEqual(rotate(seq(1, 2, 3), 1).to_complex().tolist(), [2, 3, 1])
        self.assertEqual(rotate(seq(1, 2, 3), -1).to_complex().tolist(), [3, 1, 2])
        s = seq(1, 2, 3, 4, 5)
        self.assertTrue(approx_eq(rotate(rotate(s, 2), 4), rotate(s, compose_rotations(2, 4))))
        self.assertTrue(approx_eq(rotate(rotate(s, 3), -3), s))

    def test_reduce_period(self):
        self.assertEqual(reduce_period(seq(1, 2, 1, 2)).period, 2)
        self.assertEqual(reduce_period(seq(5, 5, 5)).period, 1)
        self.assertEqual(reduce_period(seq(1, 2, 3)).period, 3)

    def test_dilate_translate(self):
        self.assertEqual(dilate(seq(1, 2), 2j).to_complex().tolist(), [2j, 4j])
        self.assertEqual(translate(seq(1, 2), -1).to_complex().tolist(), [0, 1])

    def test_sum_over_period(self):
        self.assertEqual(sum_over_period(seq(1, 2, 3)), 6)

    def test_high_precision_values(self):
        with use_precision('high'):
            s = PeriodicSeq.of([1, 2])
            self.assertTrue(s.is_high_precision)
            self.assertAlmostEqual(float(norm(s)), math.sqrt(2.5), places=12)
        self.assertFalse(PeriodicSeq.of([1, 2]).is_high_precision)


class NormTests(SimpleTestCase):
    @given(mult_waves())
    def test_wave_norm_is_one(self, w):
        self.assertAlmostEqual(norm(mw_sample(w)), 1.0, delta=1e-9)

    @given(st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False))
    def test_constant_norm_is_modulus(self, z):
        self.assertAlmostEqual(norm(seq(z)), abs(z), delta=1e-9 * max(1.0, abs(z)))

    @given(periodic_seqs(), periodic_seqs())
    def test_multiplicative_for_coprime_periods(self, a, b):
        assume(math.gcd(a.period, b.period) == 1)
        self.assertAlmostEqual(norm(ew_product(a, b)), norm(a) * norm(b), delta=1e-9 * (1 + norm(a) * norm(b)))

    @given(periodic_seqs(), periodic_seqs())
    def test_sum_is_commutative(self, a, b):
        self.assertTrue(approx_eq(ew_sum(a, b), ew_sum(b, a)))

    def test_norm_uses_principal_window(self):
        self.assertAlmostEqual(norm(seq(3, 4)), math.sqrt(12.5))
        self.assertTrue(np.isclose(norm(mw_sample(MultWave(0, 0))), 1))


class AlgebraTests(SimpleTestCase):
    loose = Tolerance(abs_eps=1e-9, rel_eps=1e-9)

    @given(periodic_seqs(), periodic_seqs())
    def test_align_keeps_extension_values(self, a, b):
        a2, b2 = align(a, b)
        self.assertEqual(a2.period, b2.period)
        self.assertEqual(a2.period, a.period * b.period // math.gcd(a.period, b.period))
        for xi in range(-a2.period, 2 * a2.period + 1):
            self.assertEqual(a2.at(xi), a.at(xi))
            self.assertEqual(b2.at(xi), b.at(xi))

    @given(periodic_seqs(), periodic_seqs(), periodic_seqs())
    def test_associative(self, a, b, c):
        self.assertTrue(approx_eq(ew_sum(ew_sum(a, b), c), ew_sum(a, ew_sum(b, c)), self.loose))
        self.assertTrue(approx_eq(ew_product(ew_product(a, b), c), ew_product(a, ew_product(b, c)), self.loose))

    @given(periodic_seqs(), periodic_seqs(), periodic_seqs())
    def test_product_distributes_over_sum(self, a, b, c):
        left = ew_product(a, ew_sum(b, c))
        right = ew_sum(ew_product(a, b), ew_product(a, c))
        self.assertTrue(approx_eq(left, right, self.loose))

    @given(periodic_seqs(), periodic_seqs(), st.integers(min_value=-20, max_value=20))
    def test_rotate_distributes(self, a, b, k):
        self.assertTrue(approx_eq(rotate(ew_sum(a, b), k), ew_sum(rotate(a, k), rotate(b, k))))
        self.assertTrue(approx_eq(rotate(ew_product(a, b), k), ew_product(rotate(a, k), rotate(b, k))))
