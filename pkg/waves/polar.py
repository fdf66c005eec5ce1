# polar.py - polar sums: A * w(f, g) decompositions of sums of wave numbers
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import mpmath
import numpy as np

from . import numerics
from .conf import Tolerance, resolve_tolerance
from .exceptions import ArgumentError, ConsistencyError, DegenerateSubsetError, DivisionByZeroElementError
from .multiplicative import MultWave, mw_sample
from .periodic import PeriodicSeq, align, as_seq, ew_product, ew_quotient, norm
from .rational import Rational, combined_period

logger = logging.getLogger(__name__)

MAX_RECURSIVE_TERMS = 10

Term = Tuple[Union[PeriodicSeq, complex, int, Fraction], MultWave]


@dataclass(frozen=True)
class PolarForm:
    """amplitude * sample(carrier) reproduces the decomposed sequence"""

    amplitude: PeriodicSeq
    carrier: MultWave

    def reconstruct(self) -> PeriodicSeq:
        return ew_product(self.amplitude, mw_sample(self.carrier))


@dataclass(frozen=True)
class LogPhase:
    """F = 2 pi (f xi + g) - i ln C sampled over a period, so exp(i F) = C w(f, g)"""

    value: PeriodicSeq

    @classmethod
    def from_term(cls, coeff, w: MultWave, period: Optional[int] = None) -> 'LogPhase':
        coeff = as_seq(coeff)
        period = period or combined_period([coeff.period, w.period])
        coeff = coeff.extend(period)
        if np.any(np.abs(coeff.to_complex()) == 0):
            raise ArgumentError(f'coefficient of {w} vanishes; its log phase is undefined')
        # unreduced turns keep sum(F)/N on the carrier w(mean f, mean g)
        turns = [w.f * xi + w.g for xi in range(1, period + 1)]
        angles = numerics.as_values([float(t) for t in turns]) if not coeff.is_high_precision else \
            numerics.as_values([numerics.mp_scalar(t) for t in turns], high=True)
        return cls(PeriodicSeq(2 * numerics.pi() * angles - 1j * numerics.log(coeff.values)))

    @classmethod
    def constant(cls, value) -> 'LogPhase':
        return cls(PeriodicSeq.constant(value))

    def exp_i(self) -> PeriodicSeq:
        return PeriodicSeq(numerics.exp(1j * self.value.values))


def _half_turn_amplitude(a: MultWave, b: MultWave, use_sine: bool) -> PolarForm:
    df = (a.f - b.f) / 2
    dg = (a.g - b.g) / 2
    period = df.denominator
    turns = [df * xi + dg for xi in range(1, period + 1)]
    if use_sine:
        amplitude = 2j * numerics.sin_turns(turns)
    else:
        amplitude = 2 * numerics.cos_turns(turns)
    carrier = MultWave((a.f + b.f) / 2, (a.g + b.g) / 2)
    return PolarForm(PeriodicSeq(amplitude), carrier)


def sum2_polar(a: MultWave, b: MultWave) -> PolarForm:
    """a + b = 2 cos(2 pi ((f1-f2)/2 xi + (g1-g2)/2)) w((f1+f2)/2, (g1+g2)/2)"""
    return _half_turn_amplitude(a, b, use_sine=False)


def diff2_polar(a: MultWave, b: MultWave) -> PolarForm:
    """a - b = 2i sin(2 pi ((f1-f2)/2 xi + (g1-g2)/2)) w((f1+f2)/2, (g1+g2)/2)"""
    return _half_turn_amplitude(a, b, use_sine=True)


def direct_sum(terms: Sequence[Term]) -> PeriodicSeq:
    if not terms:
        raise ArgumentError('a sum needs at least one term')
    total = None
    for coeff, w in terms:
        term = ew_product(as_seq(coeff), mw_sample(w))
        total = term if total is None else total + term
    return total


def mean_carrier(waves: Sequence[MultWave]) -> MultWave:
    n = len(waves)
    return MultWave(sum((w.f for w in waves), Fraction(0)) / n, sum((w.g for w in waves), Fraction(0)) / n)


def log_phases(terms: Sequence[Term]) -> List[LogPhase]:
    period = combined_period([as_seq(c).period for c, _ in terms] + [w.period for _, w in terms])
    return [LogPhase.from_term(c, w, period) for c, w in terms]


def polar_decompose_sum(terms: Sequence[Term], cross_check: bool = False,
                        tol: Optional[Tolerance] = None) -> PolarForm:
    """Polar form of sum_j C_j w_j with carrier w(mean f_j, mean g_j)"""
    tol = resolve_tolerance(tol)
    total = direct_sum(terms)
    carrier = mean_carrier([w for _, w in terms])
    amplitude = ew_quotient(total, mw_sample(carrier))
    zero = np.abs(numerics.to_complex(align(total, amplitude)[0].values)) <= tol.abs_eps
    if np.any(zero):
        values = amplitude.values.copy()
        values[zero] = 0
        amplitude = PeriodicSeq(values)
    form = PolarForm(amplitude, carrier)
    if cross_check:
        _cross_check(form, terms)
    return form


def _cross_check(form: PolarForm, terms: Sequence[Term]) -> None:
    logs = log_phases(terms)
    recursive = amplitude_recursive(logs)
    # exp(i * sum(-i ln C_j) / N) is the coefficient part of exp(i sum(F)/N)
    mean_log = sum(numerics.log(as_seq(c).extend(recursive.period).values) for c, _ in terms) / len(terms)
    expected = PeriodicSeq(recursive.values * numerics.exp(mean_log))
    got, want = align(form.amplitude, expected)
    gap = np.max(np.abs(np.abs(got.to_complex()) - np.abs(want.to_complex())))
    if gap > 1e-6:
        raise ConsistencyError(f'subset recursion disagrees with direct division by {gap:.3g}')
    logger.debug(f'polar cross-check passed for {len(terms)} terms (gap {gap:.3g})')


def _leave_one_out_factor(sub_amplitude: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """2 A^(1/2) cos(theta/2 - i ln A^(1/2)) with A^(1/2) = exp(ln(A)/2)"""
    half_log = numerics.log(sub_amplitude) / 2
    return 2 * numerics.exp(half_log) * numerics.cos(theta / 2 - 1j * half_log)


class SubsetRecursion:
    """Memoized amplitudes A_k over subsets of the terms, keyed by bitmask.

    The table lives for one call only.
    """

    def __init__(self, values: List[np.ndarray], tol: Tolerance):
        self.F = values
        self.tol = tol
        self.memo: Dict[int, np.ndarray] = {}

    def members(self, mask: int) -> List[int]:
        return [j for j in range(len(self.F)) if mask >> j & 1]

    def phase_sum(self, mask: int) -> np.ndarray:
        return sum(self.F[j] for j in self.members(mask))

    def check_nonvanishing(self, mask: int, amplitude: np.ndarray) -> None:
        small = np.abs(numerics.to_complex(amplitude)) <= self.tol.abs_eps
        if np.any(small):
            xi = int(np.flatnonzero(small)[0]) + 1
            raise DegenerateSubsetError([j + 1 for j in self.members(mask)], xi)

    def factors(self, mask: int, check: bool = True) -> Tuple[List[np.ndarray], List[np.ndarray], List[np.ndarray]]:
        """Per member m: the leave-one-out amplitude, theta_m, and its factor"""
        members = self.members(mask)
        k = len(members) - 1
        subs, thetas, factors = [], [], []
        for m in members:
            rest = mask & ~(1 << m)
            sub = self.amplitude(rest)
            theta = self.phase_sum(rest) / k - self.F[m]
            if check:
                self.check_nonvanishing(rest, sub)
                factor = _leave_one_out_factor(sub, theta)
            else:
                # limit form, valid when the leave-one-out amplitude is zero
                factor = sub * numerics.exp(1j * theta / 2) + numerics.exp(-1j * theta / 2)
            subs.append(sub)
            thetas.append(theta)
            factors.append(factor)
        return subs, thetas, factors

    def amplitude(self, mask: int) -> np.ndarray:
        if mask in self.memo:
            return self.memo[mask]
        members = self.members(mask)
        size = len(members)
        if size == 1:
            result = numerics.as_values(np.ones(len(self.F[0])), high=numerics.is_object(self.F[0]))
        else:
            subs, thetas, factors = self.factors(mask)
            product = factors[0]
            for factor in factors[1:]:
                product = product * factor
            root = numerics.principal_root(product, size)
            result = self.pick_branch(mask, root, subs[0], thetas[0], members[0], size)
        self.memo[mask] = result
        return result

    def pick_branch(self, mask, root, sub, theta, first, size) -> np.ndarray:
        """Choose the size-th root of unity making A_k exp(i sum F / k) equal the first representation"""
        k = size - 1
        rest = mask & ~(1 << first)
        representation = numerics.exp(1j * self.phase_sum(rest) / k) * (sub + numerics.exp(-1j * theta))
        carrier = numerics.exp(1j * self.phase_sum(mask) / size)
        target = numerics.to_complex(representation)
        base = numerics.to_complex(root * carrier)
        unity = np.exp(2j * np.pi * np.arange(size) / size)
        candidates = base[None, :] * unity[:, None]
        choice = np.argmin(np.abs(candidates - target[None, :]), axis=0)
        if numerics.is_object(root):
            roots = [mpmath.expjpi(mpmath.mpf(2 * int(r)) / size) for r in choice]
            return np.array([a * z for a, z in zip(root, roots)], dtype=object)
        return root * unity[choice]


def aligned_phase_values(logs: Sequence[LogPhase]) -> List[np.ndarray]:
    period = combined_period([lp.value.period for lp in logs])
    return [lp.value.extend(period).values for lp in logs]


def amplitude_recursive(logs: Sequence[LogPhase], tol: Optional[Tolerance] = None) -> PeriodicSeq:
    """A_N with sum_j exp(i F_j) = A_N exp(i sum_j F_j / N), built over the subset lattice"""
    n = len(logs)
    if not 1 <= n <= MAX_RECURSIVE_TERMS:
        raise ArgumentError(f'amplitude_recursive supports 1..{MAX_RECURSIVE_TERMS} terms, got {n}')
    recursion = SubsetRecursion(aligned_phase_values(logs), resolve_tolerance(tol))
    return PeriodicSeq(recursion.amplitude((1 << n) - 1))


def sum_via_products(a: PeriodicSeq, b: PeriodicSeq) -> PeriodicSeq:
    """2 cos((1/i) ln(a/b)^(1/2)) (ab)^(1/2) with both half-logs taken from the same ln a, ln b"""
    la, lb = _coherent_logs(a, b)
    half_diff = (la - lb) / 2
    return PeriodicSeq(2 * numerics.cos(-1j * half_diff) * numerics.exp((la + lb) / 2))


def diff_via_products(a: PeriodicSeq, b: PeriodicSeq) -> PeriodicSeq:
    la, lb = _coherent_logs(a, b)
    half_diff = (la - lb) / 2
    return PeriodicSeq(2j * numerics.sin(-1j * half_diff) * numerics.exp((la + lb) / 2))


def _coherent_logs(a: PeriodicSeq, b: PeriodicSeq) -> Tuple[np.ndarray, np.ndarray]:
    a, b = align(a, b)
    for seq in (a, b):
        zeros = np.flatnonzero(np.abs(seq.to_complex()) == 0)
        if len(zeros):
            raise DivisionByZeroElementError(int(zeros[0]) + 1, 'products form needs nonvanishing elements')
    return numerics.log(a.values), numerics.log(b.values)


def magnitude_form(a: PeriodicSeq) -> Tuple[PeriodicSeq, PeriodicSeq]:
    """Element-wise modulus and argument in (-pi, pi]"""
    return PeriodicSeq(numerics.modulus(a.values)), PeriodicSeq(numerics.argument(a.values))


def cauchy_demo(f_seq: Sequence[Rational], g_seq: Sequence[Rational], f0: float, g0: float,
                window: int) -> List[float]:
    """Windowed norms of w(f_n, g_n) - w(f0, g0) over xi = 1..window"""
    if window < 1:
        raise ArgumentError(f'window must be >= 1, got {window}')
    if len(f_seq) != len(g_seq):
        raise ArgumentError('f_seq and g_seq must have the same length')
    xi = np.arange(1, window + 1)
    limit = np.exp(2j * np.pi * (float(f0) * xi + float(g0)))
    norms = []
    for f, g in zip(f_seq, g_seq):
        approx = np.exp(2j * np.pi * (float(f) * xi + float(g)))
        norms.append(float(norm(PeriodicSeq(approx - limit))))
    return norms
