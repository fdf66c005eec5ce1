# equations.py - residual checks, two-term and N-term zero conditions, Mobius fixed points
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .conf import Tolerance, resolve_tolerance
from .exceptions import ArgumentError, ConsistencyError
from .multiplicative import MultWave
from .periodic import PeriodicSeq, as_seq, ew_quotient, norm, root_n
from .polar import Term, SubsetRecursion, aligned_phase_values, direct_sum, log_phases, sum2_polar
from .rational import Rational

logger = logging.getLogger(__name__)
divergence_logger = logging.getLogger('waves.divergence')

MIN_FACTORED_TERMS = 3
MAX_FACTORED_TERMS = 8


def residual(terms: Sequence[Term]) -> float:
    """Norm of sum_j C_j w_j over the combined period; zero iff the equation holds"""
    return float(norm(direct_sum(terms)))


@dataclass(frozen=True)
class TwoTermSolution:
    """The family f1 = f2 + df + k, g1 = g2 + dg + l over integers k, l"""

    f2: Rational
    g2: Rational
    df: Rational = Fraction(0)
    dg: Rational = Fraction(1, 2)

    def member(self, k: int = 0, l: int = 0) -> MultWave:
        return MultWave(self.f2 + self.df + k, self.g2 + self.dg + l)

    def terms(self, k: int = 0, l: int = 0) -> List[Term]:
        return [(1, self.member(k, l)), (1, MultWave(self.f2, self.g2))]

    def vanishing_phases(self, k: int = 0, l: int = 0, tol: Optional[Tolerance] = None) -> Tuple[int, ...]:
        """1-based phases where the cosine amplitude of the pair vanishes"""
        tol = resolve_tolerance(tol)
        amplitude = sum2_polar(self.member(k, l), MultWave(self.f2, self.g2)).amplitude.to_complex()
        return tuple(int(i) + 1 for i in np.flatnonzero(np.abs(amplitude) <= tol.abs_eps))


def solve_two_term(f2: Rational, g2: Rational, tol: Optional[Tolerance] = None) -> TwoTermSolution:
    """w(f1, g1) + w(f2, g2) = 0 needs 2 cos((F1 - F2)/2) = 0: f1 - f2 integral, g1 - g2 in 1/2 + Z"""
    tol = resolve_tolerance(tol)
    solution = TwoTermSolution(Fraction(f2), Fraction(g2))
    check = residual(solution.terms())
    if check > tol.abs_eps:
        raise ConsistencyError(f'two-term representative leaves residual {check:.3g}')
    return solution


def check_stated_two_term(f2: Rational, g2: Rational) -> float:
    """Residual of the constants f1 = f2 + 2, g1 = g2 - 1 quoted for the two-term equation.

    They make w(f1, g1) equal w(f2, g2), so the sum is 2 w(f2, g2) and the
    residual is 2; the divergence is logged rather than raised.
    """
    stated = MultWave(Fraction(f2) + 2, Fraction(g2) - 1)
    value = residual([(1, stated), (1, MultWave(f2, g2))])
    if value > 0:
        divergence_logger.warning(
            f'stated two-term solution {stated} for w({f2},{g2}) leaves residual {value:.12g}'
        )
    return value


@dataclass(frozen=True)
class FactoredConditions:
    """The N factors A_(N-1)m^(1/2) cos(theta_m/2 - i ln A_(N-1)m^(1/2)) of an N-term sum"""

    factors: Tuple[PeriodicSeq, ...]
    sub_amplitudes: Tuple[PeriodicSeq, ...]
    vanishing: Tuple[int, ...]
    residual: float
    phase_total: PeriodicSeq = field(repr=False)

    def left_side_power(self) -> PeriodicSeq:
        """(sum_j exp(i F_j))^N rebuilt from the factors: 2^N prod(factors) exp(i sum F)"""
        n = len(self.factors)
        product = np.ones(self.phase_total.period, dtype=complex)
        for factor in self.factors:
            product = product * factor.to_complex()
        return PeriodicSeq(2 ** n * product * np.exp(1j * self.phase_total.to_complex()))


def factored_conditions(terms: Sequence[Term], tol: Optional[Tolerance] = None) -> FactoredConditions:
    """Evaluate the N leave-one-out factors of an N-term equation and report the vanishing ones.

    A factor counts as vanishing when it, or the leave-one-out amplitude it is
    built on, is zero at some phase. Deeper degenerate subsets raise.
    """
    n = len(terms)
    if not MIN_FACTORED_TERMS <= n <= MAX_FACTORED_TERMS:
        raise ArgumentError(f'factored_conditions supports {MIN_FACTORED_TERMS}..{MAX_FACTORED_TERMS} terms, got {n}')
    tol = resolve_tolerance(tol)
    values = aligned_phase_values(log_phases(terms))
    recursion = SubsetRecursion(values, tol)
    subs, _, doubled = recursion.factors((1 << n) - 1, check=False)
    factors = tuple(PeriodicSeq(f / 2) for f in doubled)
    sub_amplitudes = tuple(PeriodicSeq(s) for s in subs)
    vanishing = tuple(
        m + 1 for m in range(n)
        if np.any(np.abs(factors[m].to_complex()) <= tol.abs_eps)
        or np.any(np.abs(sub_amplitudes[m].to_complex()) <= tol.abs_eps)
    )
    value = residual(terms)
    logger.debug(f'{n}-term factors vanishing: {list(vanishing)} (residual {value:.3g})')
    return FactoredConditions(factors, sub_amplitudes, vanishing, value, PeriodicSeq(sum(values)))


@dataclass(frozen=True)
class QuadraticRoots:
    plus: PeriodicSeq
    minus: PeriodicSeq
    residual_plus: float
    residual_minus: float
    double_phases: Tuple[int, ...] = ()
    poles: Tuple[int, ...] = ()

    @property
    def double_root(self) -> bool:
        return bool(self.double_phases)

    @property
    def roots(self) -> Tuple[PeriodicSeq, PeriodicSeq]:
        return self.plus, self.minus

    @property
    def residuals(self) -> Tuple[float, float]:
        return self.residual_plus, self.residual_minus


def _quadratic_residual(a, b, c, d, omega: PeriodicSeq) -> float:
    return float(norm(c * omega * omega + (d - a) * omega - b))


def mobius_fixed_points(a, b, c, d, tol: Optional[Tolerance] = None) -> QuadraticRoots:
    """Fixed points of (A w + B) / (C w + D): roots of C w^2 + (D - A) w - B = 0.

    w = (-(D - A) +- sqrt((D - A)^2 + 4 B C)) / 2C with the principal square root.
    """
    tol = resolve_tolerance(tol)
    a, b, c, d = (as_seq(x) for x in (a, b, c, d))
    shift = d - a
    discriminant = shift * shift + 4 * b * c
    root = root_n(discriminant, 2)
    two_c = 2 * c
    plus = ew_quotient(-shift + root, two_c, tol)
    minus = ew_quotient(-shift - root, two_c, tol)
    # the square-root factor vanishes where both fixed points coincide
    double_phases = tuple(int(k) + 1 for k in np.flatnonzero(np.abs(discriminant.to_complex()) <= tol.abs_eps))
    poles = tuple(sorted(
        {int(k) + 1 for omega in (plus, minus)
         for k in np.flatnonzero(np.abs((c * omega + d).to_complex()) <= tol.abs_eps)}
    ))
    if poles:
        logger.warning(f'Mobius fixed point lands on a pole (C w + D = 0) at phases {list(poles)}')
    return QuadraticRoots(
        plus=plus,
        minus=minus,
        residual_plus=_quadratic_residual(a, b, c, d, plus),
        residual_minus=_quadratic_residual(a, b, c, d, minus),
        double_phases=double_phases,
        poles=poles,
    )


def mobius_apply(a, b, c, d, omega: PeriodicSeq, tol: Optional[Tolerance] = None) -> PeriodicSeq:
    a, b, c, d = (as_seq(x) for x in (a, b, c, d))
    return ew_quotient(a * omega + b, c * omega + d, tol)
