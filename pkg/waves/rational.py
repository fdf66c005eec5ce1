# rational.py - exact rational arithmetic, period combination and prime structure
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as fold
from typing import Iterable, List, Tuple

from sympy import factorint

from .exceptions import ArgumentError, InvalidRationalError

# Rationals are fractions.Fraction: always in lowest terms with a positive denominator
Rational = Fraction

_RATIONAL_TEXT = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


@dataclass(frozen=True)
class PrimeFactorization:
    factors: Tuple[Tuple[int, int], ...]

    @property
    def value(self) -> int:
        return math.prod(p ** e for p, e in self.factors)

    def prime_powers(self) -> List[int]:
        return [p ** e for p, e in self.factors]

    def __iter__(self):
        return iter(self.factors)


def reduce(num: int, den: int) -> Rational:
    """Lowest-terms rational num/den with positive denominator"""
    if den == 0:
        raise InvalidRationalError(f'zero denominator in {num}/{den}')
    return Fraction(int(num), int(den))


def parse_rational(text: str) -> Rational:
    match = _RATIONAL_TEXT.match(text)
    if not match:
        raise InvalidRationalError(f'not a rational: {text!r}')
    num, den = match.group(1), match.group(2)
    return reduce(int(num), int(den) if den is not None else 1)


def format_rational(r: Rational) -> str:
    """The "p/q" text form; integers are written without a denominator"""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f'{r.numerator}/{r.denominator}'


def lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def combined_period(periods: Iterable[int]) -> int:
    """Period of element-wise combinations: p_k = p_{k-1} d_k / gcd(p_{k-1}, d_k)"""
    periods = list(periods)
    if not periods:
        raise ArgumentError('combined_period needs at least one period')
    if any(int(d) < 1 for d in periods):
        raise ArgumentError(f'periods must be positive: {periods}')

    def step(p: int, d: int) -> int:
        return p * d // math.gcd(p, d)

    return fold(step, (int(d) for d in periods))


def prime_factorize(n: int) -> PrimeFactorization:
    if n < 2:
        raise ArgumentError(f'prime_factorize needs n >= 2, got {n}')
    return PrimeFactorization(tuple((int(p), int(e)) for p, e in sorted(factorint(n).items())))


def partial_fractions_mod1(r: Rational) -> List[Rational]:
    """Split r (mod 1) into terms m_k / p_k^e_k over the prime powers of its denominator.

    The prime powers are pairwise coprime, so each numerator is fixed by the
    Chinese remainder theorem: m_k = num * (den / q_k)^-1 mod q_k.
    """
    r = Fraction(r) % 1
    den = r.denominator
    if den == 1:
        return []
    terms = []
    for q in prime_factorize(den).prime_powers():
        rest = den // q
        m = (r.numerator * pow(rest, -1, q)) % q
        terms.append(Fraction(m, q))
    return terms
