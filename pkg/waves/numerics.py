# numerics.py - element kernels shared by double (complex128) and high (mpmath) precision
#
# Sequences are 1-D numpy arrays: complex128 in double precision, dtype=object
# holding mpmath.mpc values in high precision. Every kernel here accepts both.
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

import mpmath
import numpy as np

from .conf import is_high_precision

Number = Union[int, float, complex, Fraction]


def is_object(arr: np.ndarray) -> bool:
    return arr.dtype == object


def mp_scalar(x) -> mpmath.mpc:
    if isinstance(x, Fraction):
        return mpmath.mpc(mpmath.mpf(x.numerator) / x.denominator)
    if isinstance(x, (mpmath.mpc, mpmath.mpf)):
        return mpmath.mpc(x)
    x = complex(x)
    return mpmath.mpc(x.real, x.imag)


def as_values(values: Iterable[Number], high: bool = None) -> np.ndarray:
    """Coerce raw values to the array type of the requested (or current) precision"""
    if high is None:
        high = is_high_precision()
    if isinstance(values, np.ndarray) and values.dtype == object:
        high = True
    if high:
        return np.array([mp_scalar(v) for v in values], dtype=object)
    if isinstance(values, np.ndarray):
        return values.astype(complex)
    return np.array([complex(v) for v in values], dtype=complex)


def _map(fn, arr: np.ndarray) -> np.ndarray:
    return np.array([fn(x) for x in arr], dtype=object)


def turns_to_unit(turns: Sequence[Fraction]) -> np.ndarray:
    """exp(2*pi*i*t) for exact turn counts; turns are reduced mod 1 before rounding to float"""
    if is_high_precision():
        return np.array(
            [mpmath.expjpi(2 * mpmath.mpf((t % 1).numerator) / (t % 1).denominator) for t in turns],
            dtype=object,
        )
    angles = np.array([float(t % 1) for t in turns]) * (2 * np.pi)
    return np.exp(1j * angles)


def cos_turns(turns: Sequence[Fraction]) -> np.ndarray:
    if is_high_precision():
        return _map(lambda t: mpmath.mpc(mpmath.cospi(2 * mp_scalar(t % 1).real)), turns)
    return np.cos(np.array([float(t % 1) for t in turns]) * (2 * np.pi)).astype(complex)


def sin_turns(turns: Sequence[Fraction]) -> np.ndarray:
    if is_high_precision():
        return _map(lambda t: mpmath.mpc(mpmath.sinpi(2 * mp_scalar(t % 1).real)), turns)
    return np.sin(np.array([float(t % 1) for t in turns]) * (2 * np.pi)).astype(complex)


def _unsigned(arr: np.ndarray) -> np.ndarray:
    # IEEE: -0.0 + 0.0 == +0.0, which keeps log/angle on the principal branch at the cut
    return arr + 0j


def exp(arr: np.ndarray) -> np.ndarray:
    return _map(mpmath.exp, arr) if is_object(arr) else np.exp(arr)


def log(arr: np.ndarray) -> np.ndarray:
    """Principal logarithm, imaginary part in (-pi, pi]"""
    return _map(mpmath.log, arr) if is_object(arr) else np.log(_unsigned(arr))


def cos(arr: np.ndarray) -> np.ndarray:
    return _map(mpmath.cos, arr) if is_object(arr) else np.cos(arr)


def sin(arr: np.ndarray) -> np.ndarray:
    return _map(mpmath.sin, arr) if is_object(arr) else np.sin(arr)


def conj(arr: np.ndarray) -> np.ndarray:
    return _map(mpmath.conj, arr) if is_object(arr) else np.conj(arr)


def modulus(arr: np.ndarray) -> np.ndarray:
    return _map(lambda z: mpmath.mpf(abs(z)), arr) if is_object(arr) else np.abs(arr)


def argument(arr: np.ndarray) -> np.ndarray:
    """Element arguments in (-pi, pi]; the argument of 0 is 0"""
    if is_object(arr):
        return _map(lambda z: mpmath.arg(mp_scalar(z)) if z != 0 else mpmath.mpf(0), arr)
    return np.angle(_unsigned(arr))


def principal_root(arr: np.ndarray, n: int) -> np.ndarray:
    """Element-wise principal nth root: argument in (-pi/n, pi/n]; 0 maps to 0"""
    if n == 1:
        return arr.copy()
    if is_object(arr):
        return _map(lambda z: mpmath.exp(mpmath.log(z) / n) if z != 0 else mpmath.mpc(0), arr)
    out = np.zeros_like(arr, dtype=complex)
    nz = arr != 0
    out[nz] = np.exp(np.log(_unsigned(arr[nz])) / n)
    return out


def to_complex(arr: np.ndarray) -> np.ndarray:
    """Round either array kind to complex128 (for comparisons and output)"""
    if is_object(arr):
        return np.array([complex(x) for x in arr], dtype=complex)
    return np.asarray(arr, dtype=complex)


def real_sqrt(x):
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return mpmath.sqrt(mpmath.re(x))
    return math.sqrt(float(np.real(x)))


def pi():
    return mpmath.mp.pi if is_high_precision() else math.pi
