"""Shared hypothesis strategies for the waves test suite"""
from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from waves.multiplicative import MultWave
from waves.periodic import PeriodicSeq

MAX_DENOMINATOR = 64


@st.composite
def rationals(draw, max_denominator=MAX_DENOMINATOR, max_numerator=4 * MAX_DENOMINATOR):
    den = draw(st.integers(min_value=1, max_value=max_denominator))
    num = draw(st.integers(min_value=-max_numerator, max_value=max_numerator))
    return Fraction(num, den)


@st.composite
def mult_waves(draw, max_denominator=MAX_DENOMINATOR):
    return MultWave(draw(rationals(max_denominator)), draw(rationals(max_denominator)))


@st.composite
def simple_waves(draw, max_period=24):
    """w(m/n, p/n) with gcd(m, n) = 1"""
    n = draw(st.integers(min_value=2, max_value=max_period))
    m = draw(st.integers(min_value=1, max_value=n - 1).filter(lambda m: np.gcd(m, n) == 1))
    p = draw(st.integers(min_value=0, max_value=n - 1))
    return MultWave(Fraction(m, n), Fraction(p, n))


def complexes(min_magnitude=0.0, max_magnitude=10.0):
    return st.builds(
        lambda r, t: r * np.exp(1j * t),
        st.floats(min_value=min_magnitude, max_value=max_magnitude, allow_nan=False),
        st.floats(min_value=-np.pi, max_value=np.pi, allow_nan=False),
    )


@st.composite
def periodic_seqs(draw, max_period=8, nonvanishing=False):
    period = draw(st.integers(min_value=1, max_value=max_period))
    low = 0.1 if nonvanishing else 0.0
    values = draw(st.lists(complexes(low), min_size=period, max_size=period))
    return PeriodicSeq.of(values, high=False)
