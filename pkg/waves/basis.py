# basis.py - orthogonal and orthonormal phase bases, phase projection, co- and re-numbers
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Tuple

import numpy as np

from . import numerics
from .conf import Tolerance, resolve_tolerance, use_precision
from .exceptions import ArgumentError, ConsistencyError
from .multiplicative import MultWave, mw_sample
from .periodic import PeriodicSeq, approx_eq, ew_difference, ew_product

logger = logging.getLogger(__name__)

# construction validation switches to high precision above this order
HIGH_PRECISION_ORDER = 16
# n^2 complex values per basis; larger orders are refused by the CLI and the API
MAX_BASIS_ORDER = 4096


@dataclass(frozen=True)
class BasisSet:
    n: int
    elements: Tuple[PeriodicSeq, ...]
    orthonormal: bool = False

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, j: int) -> PeriodicSeq:
        """1-based element access, matching the phase index"""
        return self.elements[j - 1]

    def rows(self):
        return [e.to_complex().tolist() for e in self.elements]


def _check_order(n: int, minimum: int) -> None:
    if n < minimum:
        raise ArgumentError(f'basis order must be >= {minimum}, got {n}')


def _check_phase(n: int, j: int) -> None:
    if not 1 <= j <= n:
        raise ArgumentError(f'phase index must be in 1..{n}, got {j}')


def translated_wave(n: int, j: int) -> PeriodicSeq:
    """Samples of w(1/n, 0) - w(0, j/n); zero at xi = j"""
    _check_order(n, 2)
    _check_phase(n, j)
    return ew_difference(mw_sample(MultWave(Fraction(1, n))), mw_sample(MultWave(0, Fraction(j, n))))


def sin_product(n: int):
    """prod_{m=1}^{n-1} sin(pi m / n); equals n / 2^(n-1)"""
    _check_order(n, 1)
    values = numerics.sin_turns([Fraction(m, 2 * n) for m in range(1, n)])
    product = numerics.as_values([1], high=numerics.is_object(values))[0]
    for v in values:
        product = product * v
    return product.real


def construct_orthogonal_element(n: int, j: int) -> Tuple[complex, PeriodicSeq]:
    """Build u(1/n, j) from translated waves.

    The leave-one-out product of translated waves is the conjugate element,
    nonzero only at xi = j where it takes t(j) = n exp(-2 pi i j / n);
    multiplying by w(1/n, 0) leaves n at phase j.
    """
    _check_order(n, 2)
    _check_phase(n, j)
    product = None
    for m in range(1, n + 1):
        if m == j:
            continue
        wave = translated_wave(n, m)
        product = wave if product is None else ew_product(product, wave)
    t = product.at(j)
    element = ew_product(product, mw_sample(MultWave(Fraction(1, n))))
    return t, element


def _indicator(n: int, j: int, scale: int) -> PeriodicSeq:
    values = np.zeros(n, dtype=complex)
    values[j - 1] = scale
    return PeriodicSeq(values)


def validate_construction(n: int, tol: Optional[Tolerance] = None) -> float:
    """Largest deviation between the constructive elements and the indicator form"""
    _check_order(n, 2)
    tol = resolve_tolerance(tol)
    mode = 'high' if n > HIGH_PRECISION_ORDER else None
    if mode:
        logger.info(f'validating basis construction for n={n} in high precision')
    worst = 0.0
    for j in range(1, n + 1):
        if mode:
            with use_precision(mode):
                t, element = construct_orthogonal_element(n, j)
        else:
            t, element = construct_orthogonal_element(n, j)
        expected_t = n * np.exp(-2j * np.pi * j / n)
        if not tol.close(complex(t), expected_t):
            raise ConsistencyError(f't({j}) = {complex(t)} for n={n}, expected {expected_t}')
        gap = np.max(np.abs(element.to_complex() - _indicator(n, j, n).to_complex()))
        worst = max(worst, float(gap))
    logger.debug(f'basis construction n={n} deviates by at most {worst:.3g}')
    return worst


@lru_cache(maxsize=64)
def _orthogonal(n: int) -> BasisSet:
    return BasisSet(n, tuple(_indicator(n, j, n) for j in range(1, n + 1)))


@lru_cache(maxsize=64)
def _orthonormal(n: int) -> BasisSet:
    return BasisSet(n, tuple(_indicator(n, j, 1) for j in range(1, n + 1)), orthonormal=True)


def orthogonal_basis(n: int, validate: bool = False) -> BasisSet:
    """u(1/n, j) for j = 1..n: n at phase j, 0 elsewhere"""
    _check_order(n, 2)
    if validate:
        validate_construction(n)
    return _orthogonal(n)


def orthonormal_basis(n: int) -> BasisSet:
    """e(1/n, j) = u(1/n, j) / n, the indicator of phase j"""
    _check_order(n, 1)
    return _orthonormal(n)


def project_phases(s: PeriodicSeq, keep: Iterable[int]) -> PeriodicSeq:
    """s with every phase outside keep zeroed"""
    keep = set(keep)
    outside = [j for j in keep if not 1 <= j <= s.period]
    if outside:
        raise ArgumentError(f'phases {sorted(outside)} are outside 1..{s.period}')
    mask = np.array([xi in keep for xi in range(1, s.period + 1)])
    values = s.values.copy()
    values[~mask] = 0
    return PeriodicSeq(values)


def co_number(w: MultWave) -> PeriodicSeq:
    """The sample of w with its xi = n phase zeroed"""
    n = w.period
    return project_phases(mw_sample(w), range(1, n))


def re_number(w: MultWave) -> PeriodicSeq:
    """The sample of w restricted to its xi = n phase"""
    return project_phases(mw_sample(w), [w.period])


def is_partition(w: MultWave, tol: Optional[Tolerance] = None) -> bool:
    """co + re recombines the sample and co * re vanishes"""
    co, re = co_number(w), re_number(w)
    zero = PeriodicSeq(np.zeros(w.period, dtype=complex))
    return approx_eq(co + re, mw_sample(w), tol) and approx_eq(co * re, zero, tol)


def expected_sin_product(n: int) -> float:
    return n / math.ldexp(1.0, n - 1)
