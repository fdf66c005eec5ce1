# integral.py - integral wave numbers, regular n-gons and particulate wave numbers
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import numpy as np

from .conf import Tolerance, resolve_tolerance
from .exceptions import ArgumentError, ConsistencyError
from .multiplicative import MultWave, mw_sample
from .periodic import PeriodicSeq, sum_over_period

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class WindowedSeq:
    """Aperiodic values on the closed window [lo, hi]; there is no extension rule"""

    lo: int
    hi: int
    values: np.ndarray

    def __post_init__(self):
        if self.lo > self.hi:
            raise ArgumentError(f'empty window [{self.lo}, {self.hi}]')
        values = np.asarray(self.values, dtype=complex).copy()
        if len(values) != self.hi - self.lo + 1:
            raise ArgumentError(f'window [{self.lo}, {self.hi}] needs {self.hi - self.lo + 1} values, got {len(values)}')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_rule(cls, lo: int, hi: int, rule) -> 'WindowedSeq':
        return cls(lo, hi, np.array([rule(xi) for xi in range(lo, hi + 1)], dtype=complex))

    def at(self, xi: int) -> complex:
        if not self.lo <= xi <= self.hi:
            raise ArgumentError(f'xi={xi} is outside the window [{self.lo}, {self.hi}]')
        return complex(self.values[xi - self.lo])

    def support(self, tol: Optional[Tolerance] = None) -> List[int]:
        """Phase indices holding a nonzero value"""
        tol = resolve_tolerance(tol)
        return [int(k) + self.lo for k in np.flatnonzero(np.abs(self.values) > tol.abs_eps)]

    def __add__(self, other: 'WindowedSeq') -> 'WindowedSeq':
        return window_sum(self, other)

    def __mul__(self, other: 'WindowedSeq') -> 'WindowedSeq':
        return window_product(self, other)


@dataclass(frozen=True)
class NGonTrace:
    t: int
    vertices: PeriodicSeq
    edge_norm: float
    vertex_norm: float


def _same_window(a: WindowedSeq, b: WindowedSeq) -> None:
    if (a.lo, a.hi) != (b.lo, b.hi):
        raise ArgumentError(f'windows differ: [{a.lo}, {a.hi}] vs [{b.lo}, {b.hi}]')


def window_sum(a: WindowedSeq, b: WindowedSeq) -> WindowedSeq:
    _same_window(a, b)
    return WindowedSeq(a.lo, a.hi, a.values + b.values)


def window_product(a: WindowedSeq, b: WindowedSeq) -> WindowedSeq:
    _same_window(a, b)
    return WindowedSeq(a.lo, a.hi, a.values * b.values)


def integral(s: PeriodicSeq) -> PeriodicSeq:
    """Cumulative sums of the phases over the principal window"""
    return PeriodicSeq(np.cumsum(s.values))


def integral_magnitudes(w: MultWave, tol: Optional[Tolerance] = None) -> List[float]:
    """|I_k| for k = 1..n, checked against |sin(pi m k / n) / sin(pi m / n)|"""
    n = w.period
    if n < 2:
        raise ArgumentError(f'integral magnitudes need a period >= 2, got {n}')
    tol = resolve_tolerance(tol)
    m = w.f.numerator
    magnitudes = np.abs(integral(mw_sample(w)).to_complex()).tolist()
    for k, got in enumerate(magnitudes, start=1):
        expected = abs(math.sin(math.pi * m * k / n) / math.sin(math.pi * m / n))
        if abs(got - expected) > tol.abs_eps + tol.rel_eps * expected:
            raise ConsistencyError(f'|I_{k}| = {got} for {w}, closed form gives {expected}')
    return magnitudes


def iterate_ngon(n: int, t_max: int) -> List[NGonTrace]:
    """Repeatedly integrate the centred vertex sequence, starting from w(1/n, 0).

    Trace t has edge_norm r_(t-1) and vertex_norm r_t with r_0 = 1, the radius
    of the seed; the first trace holds the partial sums of w(1/n, 0), which
    close at the origin.
    """
    if n < 3:
        raise ArgumentError(f'an n-gon needs n >= 3, got {n}')
    if t_max < 1:
        raise ArgumentError(f't_max must be >= 1, got {t_max}')
    seed = mw_sample(MultWave(Fraction(1, n))).to_complex()
    traces = []
    for t in range(1, t_max + 1):
        vertices = np.cumsum(seed)
        centre = vertices.mean()
        edge_norm = float(np.abs(vertices[1] - vertices[0]))
        vertex_norm = float(np.abs(vertices - centre).max())
        traces.append(NGonTrace(t, PeriodicSeq(vertices), edge_norm, vertex_norm))
        seed = vertices - centre
    logger.debug(f'{n}-gon radii: {[tr.vertex_norm for tr in traces]}')
    return traces


def ngon_radius(n: int, t: int) -> float:
    """Closed form r_t = (2 sin(pi / n))^-t"""
    return (2 * math.sin(math.pi / n)) ** -t


def is_zero_sum(s: PeriodicSeq, tol: Optional[Tolerance] = None) -> bool:
    tol = resolve_tolerance(tol)
    return abs(complex(sum_over_period(s))) <= tol.abs_eps


def _check_window(n: int, lo: int, hi: int) -> None:
    if n < 1:
        raise ArgumentError(f'n must be >= 1, got {n}')
    if lo > hi:
        raise ArgumentError(f'empty window [{lo}, {hi}]')


def co_basis_window(n: int, lo: int, hi: int) -> WindowedSeq:
    """0 at multiples of n, 1 elsewhere"""
    _check_window(n, lo, hi)
    return WindowedSeq.from_rule(lo, hi, lambda xi: 0 if xi % n == 0 else 1)


def re_basis_window(n: int, lo: int, hi: int) -> WindowedSeq:
    """1 at multiples of n, 0 elsewhere"""
    _check_window(n, lo, hi)
    return WindowedSeq.from_rule(lo, hi, lambda xi: 1 if xi % n == 0 else 0)


def _check_particulate(n: int, window: int) -> None:
    if n < 1:
        raise ArgumentError(f'n must be >= 1, got {n}')
    if window < n + 1:
        raise ArgumentError(f'window bound must be >= n + 1 = {n + 1}, got {window}')


def particulate_unit(n: int, window: int) -> WindowedSeq:
    """Re-basis of n times the co-bases of n+1..W over [-W, W]: 1 at xi = +-n only.

    Each |xi| in (n, W] is killed by the co-basis of j = |xi|, so truncating the
    product at W is exact on the window.
    """
    _check_particulate(n, window)
    lo, hi = -window, window
    result = re_basis_window(n, lo, hi)
    for j in range(n + 1, window + 1):
        result = window_product(result, co_basis_window(j, lo, hi))
    return result


def particulate_scale(n: int, m: int, window: int) -> WindowedSeq:
    """m-fold sum of the unit particulate number: m at xi = +-n"""
    if m < 1:
        raise ArgumentError(f'm must be >= 1, got {m}')
    unit = particulate_unit(n, window)
    result = unit
    for _ in range(m - 1):
        result = window_sum(result, unit)
    return result


def particulate_one_sided(n: int, q, window: int, side: str = '+') -> WindowedSeq:
    """Value q at +n (side '+') or -n (side '-') only, by masking the unit number by sign"""
    if side not in ('+', '-'):
        raise ArgumentError(f"side must be '+' or '-', got {side!r}")
    unit = particulate_unit(n, window)
    keep = (lambda xi: xi > 0) if side == '+' else (lambda xi: xi < 0)
    mask = WindowedSeq.from_rule(unit.lo, unit.hi, lambda xi: complex(q) if keep(xi) else 0)
    return window_product(unit, mask)
