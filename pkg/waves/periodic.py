# periodic.py - finite principal sequences with period-aware element-wise operators
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple, Union

import numpy as np

from . import numerics
from .conf import Tolerance, resolve_tolerance
from .exceptions import ArgumentError, DivisionByZeroElementError
from .rational import combined_period

logger = logging.getLogger(__name__)

Scalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class PeriodicSeq:
    """Principal sequence of a periodic complex sequence.

    values[k] holds the element at phase index xi = k + 1; any other xi is
    read through the extension rule values[(xi - 1) mod period].
    """

    values: np.ndarray

    def __post_init__(self):
        values = self.values
        if not isinstance(values, np.ndarray) or values.ndim != 1:
            values = numerics.as_values(list(np.ravel(values)), high=False)
        elif values.dtype != object and values.dtype != complex:
            values = values.astype(complex)
        else:
            values = values.copy()
        if len(values) < 1:
            raise ArgumentError('a periodic sequence needs at least one element')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @classmethod
    def of(cls, values: Iterable, high: Optional[bool] = None) -> 'PeriodicSeq':
        return cls(numerics.as_values(list(values), high=high))

    @classmethod
    def constant(cls, c, high: Optional[bool] = None) -> 'PeriodicSeq':
        return cls.of([c], high=high)

    @property
    def period(self) -> int:
        return len(self.values)

    @property
    def is_high_precision(self) -> bool:
        return self.values.dtype == object

    def at(self, xi: int):
        return self.values[(xi - 1) % self.period]

    def extend(self, period: int) -> 'PeriodicSeq':
        """Re-window to a multiple of the period"""
        if period % self.period:
            raise ArgumentError(f'{period} is not a multiple of the period {self.period}')
        if period == self.period:
            return self
        return PeriodicSeq(np.tile(self.values, period // self.period))

    def to_complex(self) -> np.ndarray:
        return numerics.to_complex(self.values)

    def __add__(self, other):
        return ew_sum(self, as_seq(other))

    def __radd__(self, other):
        return ew_sum(as_seq(other), self)

    def __sub__(self, other):
        return ew_difference(self, as_seq(other))

    def __rsub__(self, other):
        return ew_difference(as_seq(other), self)

    def __mul__(self, other):
        return ew_product(self, as_seq(other))

    def __rmul__(self, other):
        return ew_product(as_seq(other), self)

    def __truediv__(self, other):
        return ew_quotient(self, as_seq(other))

    def __neg__(self):
        return PeriodicSeq(-self.values)

    def __repr__(self):
        return f'PeriodicSeq(period={self.period}, values={self.to_complex().tolist()})'


def as_seq(value) -> PeriodicSeq:
    if isinstance(value, PeriodicSeq):
        return value
    return PeriodicSeq.constant(value)


def align(a: PeriodicSeq, b: PeriodicSeq) -> Tuple[PeriodicSeq, PeriodicSeq]:
    period = combined_period([a.period, b.period])
    return a.extend(period), b.extend(period)


def _zero_positions(values: np.ndarray, tol: Tolerance) -> np.ndarray:
    return np.flatnonzero(np.abs(numerics.to_complex(values)) <= tol.abs_eps)


def ew_product(a: PeriodicSeq, b: PeriodicSeq) -> PeriodicSeq:
    a, b = align(a, b)
    return PeriodicSeq(a.values * b.values)


def ew_sum(a: PeriodicSeq, b: PeriodicSeq) -> PeriodicSeq:
    a, b = align(a, b)
    return PeriodicSeq(a.values + b.values)


def ew_difference(a: PeriodicSeq, b: PeriodicSeq) -> PeriodicSeq:
    a, b = align(a, b)
    return PeriodicSeq(a.values - b.values)


def ew_quotient(a: PeriodicSeq, b: PeriodicSeq, tol: Optional[Tolerance] = None) -> PeriodicSeq:
    a, b = align(a, b)
    zeros = _zero_positions(b.values, resolve_tolerance(tol))
    if len(zeros):
        raise DivisionByZeroElementError(int(zeros[0]) + 1)
    return PeriodicSeq(a.values / b.values)


def conj(a: PeriodicSeq) -> PeriodicSeq:
    return PeriodicSeq(numerics.conj(a.values))


def orth_conj(a: PeriodicSeq) -> PeriodicSeq:
    """The orthogonal conjugate: element-wise -conj(c)"""
    return PeriodicSeq(-numerics.conj(a.values))


def root_n(a: PeriodicSeq, n: int) -> PeriodicSeq:
    if n < 1:
        raise ArgumentError(f'root order must be >= 1, got {n}')
    return PeriodicSeq(numerics.principal_root(a.values, n))


def inverse(a: PeriodicSeq, tol: Optional[Tolerance] = None) -> PeriodicSeq:
    """conj(a) / (a * conj(a)), defined only for sequences without zero elements"""
    c = conj(a)
    return ew_quotient(c, ew_product(a, c), tol)


def norm(a: PeriodicSeq):
    """sqrt of the mean of |a(xi)|^2 over the principal window"""
    total = sum(a.values * numerics.conj(a.values))
    return numerics.real_sqrt(total / a.period)


def rotate(a: PeriodicSeq, xi0: int) -> PeriodicSeq:
    """Cyclic shift: the output at xi is the input at xi + xi0"""
    return PeriodicSeq(np.roll(a.values, -int(xi0)))


def compose_rotations(k1: int, k2: int) -> int:
    """Rotations form a group under composition: S_k2 after S_k1 is S_(k1+k2)"""
    return k1 + k2


def _is_periodic_with(values: np.ndarray, d: int, tol: Tolerance) -> bool:
    rows = values.reshape(-1, d)
    ref = rows[0]
    scale = np.maximum(np.abs(rows), np.abs(ref))
    return bool(np.all(np.abs(rows - ref) <= tol.abs_eps + tol.rel_eps * scale))


def reduce_period(a: PeriodicSeq, tol: Optional[Tolerance] = None) -> PeriodicSeq:
    """Smallest divisor d of the declared period for which the sequence is d-periodic"""
    tol = resolve_tolerance(tol)
    values = numerics.to_complex(a.values)
    for d in range(1, a.period + 1):
        if a.period % d == 0 and _is_periodic_with(values, d, tol):
            if d < a.period:
                logger.debug(f'reduced period {a.period} -> {d}')
            return PeriodicSeq(a.values[:d])
    return a


def sum_over_period(a: PeriodicSeq):
    return sum(a.values)


def approx_eq(a: PeriodicSeq, b: PeriodicSeq, tol: Optional[Tolerance] = None) -> bool:
    tol = resolve_tolerance(tol)
    a, b = align(a, b)
    x, y = a.to_complex(), b.to_complex()
    scale = np.maximum(np.abs(x), np.abs(y))
    return bool(np.all(np.abs(x - y) <= tol.abs_eps + tol.rel_eps * scale))


def dilate(a: PeriodicSeq, rho) -> PeriodicSeq:
    return PeriodicSeq(a.values * _scalar_for(a, rho))


def translate(a: PeriodicSeq, c) -> PeriodicSeq:
    return PeriodicSeq(a.values + _scalar_for(a, c))


def _scalar_for(a: PeriodicSeq, c):
    return numerics.mp_scalar(c) if a.is_high_precision else complex(c)
