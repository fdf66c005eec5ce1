from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from waves.exceptions import ArgumentError, InvalidRationalError
from waves.rational import (
    combined_period, format_rational, lcm, parse_rational, partial_fractions_mod1, prime_factorize, reduce,
)

from .strategies import rationals


class ReduceTests(SimpleTestCase):
    def test_lowest_terms(self):
        self.assertEqual(reduce(6, 8), Fraction(3, 4))
        self.assertEqual(reduce(-2, -4), Fraction(1, 2))
        self.assertEqual(reduce(0, 7), Fraction(0))

    def test_sign_moves_to_numerator(self):
        r = reduce(3, -6)
        self.assertEqual((r.numerator, r.denominator), (-1, 2))

    def test_zero_denominator(self):
        with self.assertRaises(InvalidRationalError):
            reduce(1, 0)

    @given(st.integers(min_value=-10 ** 6, max_value=10 ** 6), st.integers(min_value=1, max_value=10 ** 6))
    def test_idempotent(self, num, den):
        r = reduce(num, den)
        self.assertEqual(reduce(r.numerator, r.denominator), r)
        self.assertEqual(reduce(r.numerator, r.denominator).denominator, r.denominator)


class TextFormTests(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(parse_rational('1/4'), Fraction(1, 4))
        self.assertEqual(parse_rational(' -3 / 9 '), Fraction(-1, 3))
        self.assertEqual(parse_rational('7'), 7)

    def test_parse_rejects(self):
        for text in ('', '1/', '/2', 'a/b', '1/0', '1.5'):
            with self.subTest(text=text), self.assertRaises(InvalidRationalError):
                parse_rational(text)

    def test_format(self):
        self.assertEqual(format_rational(Fraction(2, 4)), '1/2')
        self.assertEqual(format_rational(Fraction(-3)), '-3')
        self.assertEqual(format_rational(0), '0')

    @given(rationals())
    def test_format_parses_back(self, r):
        self.assertEqual(parse_rational(format_rational(r)), r)


class PeriodTests(SimpleTestCase):
    def test_combined_period(self):
        self.assertEqual(combined_period([4, 6]), 12)
        self.assertEqual(combined_period([2, 3, 5]), 30)
        self.assertEqual(combined_period([7]), 7)

    def test_combined_period_rejects(self):
        with self.assertRaises(ArgumentError):
            combined_period([])
        with self.assertRaises(ArgumentError):
            combined_period([3, 0])

    @given(st.lists(st.integers(min_value=1, max_value=60), min_size=1, max_size=6))
    def test_matches_pairwise_lcm(self, periods):
        expected = periods[0]
        for d in periods[1:]:
            expected = lcm(expected, d)
        result = combined_period(periods)
        self.assertEqual(result, expected)
        for d in periods:
            self.assertEqual(result % d, 0)


class PrimeStructureTests(SimpleTestCase):
    def test_factorize(self):
        self.assertEqual(prime_factorize(360).factors, ((2, 3), (3, 2), (5, 1)))
        self.assertEqual(prime_factorize(97).factors, ((97, 1),))
        self.assertEqual(prime_factorize(12).prime_powers(), [4, 3])

    def test_factorize_rejects_small(self):
        for n in (0, 1, -4):
            with self.subTest(n=n), self.assertRaises(ArgumentError):
                prime_factorize(n)

    @given(st.integers(min_value=2, max_value=10 ** 6))
    def test_factorization_value(self, n):
        self.assertEqual(prime_factorize(n).value, n)

    def test_partial_fractions(self):
        self.assertEqual(partial_fractions_mod1(Fraction(1, 6)), [Fraction(1, 2), Fraction(2, 3)])
        self.assertEqual(partial_fractions_mod1(Fraction(5, 6)), [Fraction(1, 2), Fraction(1, 3)])
        self.assertEqual(partial_fractions_mod1(Fraction(1, 4)), [Fraction(1, 4)])
        self.assertEqual(partial_fractions_mod1(Fraction(5)), [])

    @given(rationals())
    def test_partial_fractions_sum_mod_one(self, r):
        terms = partial_fractions_mod1(r)
        self.assertEqual((sum(terms, Fraction(0)) - r) % 1, 0)
        primes = []
        for t in terms:
            factors = prime_factorize(t.denominator).factors
            self.assertEqual(len(factors), 1)
            primes.append(factors[0][0])
        self.assertEqual(sorted(primes), primes)
