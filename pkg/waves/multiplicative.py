# multiplicative.py - the exact Abelian group of wave numbers w(f, g)
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List

from sympy import isprime

from . import numerics
from .exceptions import ArgumentError, InvalidRationalError
from .periodic import PeriodicSeq
from .rational import Rational, format_rational, parse_rational, partial_fractions_mod1

_WAVE_TEXT = re.compile(r'^\s*w\(\s*([^,()]+?)\s*,\s*([^,()]+?)\s*\)\s*$')


@dataclass(frozen=True)
class MultWave:
    """w(f, g) = exp(2 pi i (f xi + g)); f in cycles per phase step, g in cycles.

    g is kept in [0, 1); f is kept exact (w(f + 1, g) samples the same
    sequence, see is_equivalent).
    """

    f: Rational
    g: Rational = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'f', Fraction(self.f))
        object.__setattr__(self, 'g', Fraction(self.g) % 1)

    @property
    def period(self) -> int:
        return self.f.denominator

    @classmethod
    def parse(cls, text: str) -> 'MultWave':
        match = _WAVE_TEXT.match(text)
        if not match:
            raise InvalidRationalError(f'not a wave number literal: {text!r}')
        return cls(parse_rational(match.group(1)), parse_rational(match.group(2)))

    def __str__(self):
        return f'w({format_rational(self.f)},{format_rational(self.g)})'

    def __mul__(self, other: 'MultWave') -> 'MultWave':
        return mw_product(self, other)


IDENTITY = MultWave(0, 0)


def roots_of_unity(n: int) -> MultWave:
    """The generator w(1/n, 0) of the cyclic group of nth roots of unity"""
    if n < 1:
        raise ArgumentError(f'n must be >= 1, got {n}')
    return MultWave(Fraction(1, n), 0)


def mw_sample(w: MultWave) -> PeriodicSeq:
    turns = [w.f * xi + w.g for xi in range(1, w.period + 1)]
    return PeriodicSeq(numerics.turns_to_unit(turns))


def mw_product(a: MultWave, b: MultWave) -> MultWave:
    return MultWave(a.f + b.f, a.g + b.g)


def mw_product_all(waves: Iterable[MultWave]) -> MultWave:
    result = IDENTITY
    for w in waves:
        result = mw_product(result, w)
    return result


def mw_power(w: MultWave, k: int) -> MultWave:
    return MultWave(w.f * k, w.g * k)


def mw_inverse(a: MultWave) -> MultWave:
    return MultWave(-a.f, -a.g)


def mw_reflect_R(a: MultWave) -> MultWave:
    return MultWave(-a.f, -a.g)


def mw_reflect_I(a: MultWave) -> MultWave:
    # (-f, 1/2 - g): angles in cycles, so the sample is -conj(sample(a))
    return MultWave(-a.f, Fraction(1, 2) - a.g)


def mw_root(a: MultWave, n: int) -> MultWave:
    if n < 1:
        raise ArgumentError(f'root order must be >= 1, got {n}')
    return MultWave(a.f / n, a.g / n)


def mw_rotate(w: MultWave, h: Rational) -> MultWave:
    """Rotation by the constant wave number w(0, h)"""
    return mw_product(MultWave(0, h), w)


def is_equivalent(a: MultWave, b: MultWave) -> bool:
    """Same sampled sequence: f equal mod 1 and g equal"""
    return (a.f - b.f).denominator == 1 and a.g == b.g


def phases(w: MultWave) -> List[complex]:
    """The n distinct values exp(2 pi i ((m xi mod n)/n + g)), ordered by phase index"""
    m, n = w.f.numerator, w.f.denominator
    turns = [Fraction((m * xi) % n, n) + w.g for xi in range(1, n + 1)]
    return numerics.to_complex(numerics.turns_to_unit(turns)).tolist()


def is_constant(w: MultWave) -> bool:
    return w.f.denominator == 1


def is_simple(w: MultWave) -> bool:
    return w.g.denominator == w.f.denominator


def is_period_prime(w: MultWave) -> bool:
    return bool(isprime(w.period))


def factor_period_prime(w: MultWave) -> List[MultWave]:
    """Prime-power-period factors, f-parts then g-parts, each in increasing prime order.

    The product of the factors is equivalent to w; an empty list means w is
    equivalent to the identity.
    """
    f_parts = [MultWave(t, 0) for t in partial_fractions_mod1(w.f)]
    g_parts = [MultWave(0, t) for t in partial_fractions_mod1(w.g)]
    return f_parts + g_parts

