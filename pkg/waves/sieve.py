# sieve.py - circular products, cumulative co-number masks and iterative prime-phase discovery
import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

import numpy as np
from sympy import nextprime, prevprime

from .exceptions import ArgumentError, DegenerateProductError, PhaseRangeError, SieveInvariantError
from .multiplicative import MultWave

logger = logging.getLogger(__name__)


def circ_product(a: MultWave, b: MultWave) -> MultWave:
    """w(1/(n1 n2), (g1 + g2)/A) with A = m1 n2 + m2 n1.

    The product a * b has frequency A/(n1 n2); its A-th root brings the
    frequency down to 1/(n1 n2).
    """
    m1, n1 = a.f.numerator, a.f.denominator
    m2, n2 = b.f.numerator, b.f.denominator
    big_a = m1 * n2 + m2 * n1
    if big_a == 0:
        raise DegenerateProductError(f'circular product of {a} and {b} is undefined (A = 0)')
    return MultWave(Fraction(1, n1 * n2), (a.g + b.g) / big_a)


@dataclass(frozen=True, eq=False)
class SupportMask:
    """Nonzero-phase bits over [2, hi]; bit(xi) is False exactly at multiples of a modulus"""

    hi: int
    bits: np.ndarray
    moduli: Tuple[int, ...] = ()
    lo: int = 2

    def bit(self, xi: int) -> bool:
        if not self.lo <= xi <= self.hi:
            raise PhaseRangeError(f'xi={xi} is outside the mask window [{self.lo}, {self.hi}]')
        return bool(self.bits[xi - self.lo])

    def nonzero_phases(self, lo: int, hi: int) -> List[int]:
        """Phases in [lo, hi) whose bit is set"""
        lo, hi = max(lo, self.lo), min(hi, self.hi + 1)
        if lo >= hi:
            return []
        return (np.flatnonzero(self.bits[lo - self.lo:hi - self.lo]) + lo).tolist()

    def __eq__(self, other):
        if not isinstance(other, SupportMask):
            return NotImplemented
        return (self.lo, self.hi) == (other.lo, other.hi) and bool(np.array_equal(self.bits, other.bits))


def cum_co_mask(moduli: Iterable[int], hi: int) -> SupportMask:
    """Zero pattern of the accumulated co-numbers: bit(xi) is False iff some modulus divides xi"""
    moduli = tuple(int(m) for m in moduli)
    if any(m < 2 for m in moduli):
        raise ArgumentError(f'moduli must be >= 2: {list(moduli)}')
    if moduli and hi < max(moduli):
        raise ArgumentError(f'mask bound {hi} is below the largest modulus {max(moduli)}')
    bits = np.ones(max(hi - 1, 0), dtype=bool)
    for m in moduli:
        bits[m - 2::m] = False
    return SupportMask(hi, bits, moduli)


@dataclass(frozen=True)
class SieveState:
    known_primes: Tuple[int, ...]
    frontier: int

    @property
    def last_prime(self) -> int:
        return self.known_primes[-1]


@dataclass(frozen=True)
class SieveTraceRow:
    step: int
    N: int
    p_next: int
    range_lo: int
    range_hi: int
    found: int
    cum_count: int

    HEADER = ('step', 'N', 'p_next', 'range_lo', 'range_hi', 'found', 'cum_count')

    def as_row(self) -> Tuple[int, ...]:
        return tuple(getattr(self, name) for name in self.HEADER)


def initial_state() -> SieveState:
    return SieveState((2, 3), 3)


def sieve_step(state: SieveState, limit: Optional[int] = None,
               validate: bool = False) -> Tuple[SieveState, List[int]]:
    """One discovery step from p_1..p_(N+1): mask over p_1..p_N, read [p_(N+1), p_(N+1)^2).

    limit truncates the read window (and the frontier) at limit; the returned
    list holds every nonzero phase of the window, p_(N+1) included.
    """
    primes = state.known_primes
    if not primes or primes[0] != 2:
        raise SieveInvariantError(f'a sieve state must start with 2, got {list(primes[:3])}')
    p_next = primes[-1]
    hi = p_next * p_next
    if limit is not None:
        hi = min(hi, limit + 1)
    started = time.perf_counter()
    mask = cum_co_mask(primes[:-1], max(hi - 1, p_next))
    found = mask.nonzero_phases(p_next, hi)
    if validate:
        _check_against_oracle(found, p_next, hi)
    known = primes + tuple(p for p in found if p > p_next)
    frontier = max(state.frontier, hi - 1)
    logger.info(
        f'sieve step N={len(primes) - 1}: [{p_next}, {hi}) gave {len(found)} primes '
        f'in {time.perf_counter() - started:.4f}s'
    )
    return SieveState(known, frontier), found


def _check_against_oracle(found: List[int], lo: int, hi: int) -> None:
    expected = [p for p in eratosthenes(max(hi - 1, 2)) if p >= lo]
    if found != expected:
        missing = sorted(set(expected) - set(found))
        extra = sorted(set(found) - set(expected))
        raise SieveInvariantError(f'step over [{lo}, {hi}) missed {missing[:5]} and wrongly kept {extra[:5]}')


def sieve_trace(limit: int, validate: bool = False) -> Tuple[SieveState, List[SieveTraceRow]]:
    if limit < 3:
        raise ArgumentError(f'limit must be >= 3, got {limit}')
    state = initial_state()
    rows = []
    step = 0
    while state.frontier < limit:
        step += 1
        before = state
        state, found = sieve_step(state, limit=limit, validate=validate)
        rows.append(SieveTraceRow(
            step=step,
            N=len(before.known_primes) - 1,
            p_next=before.last_prime,
            range_lo=before.last_prime,
            range_hi=min(before.last_prime ** 2, limit + 1),
            found=len(found),
            cum_count=len(state.known_primes),
        ))
    return state, rows


def discover_primes(limit: int, validate: bool = False) -> List[int]:
    """All primes <= limit, found by repeated sieve steps"""
    state, _ = sieve_trace(limit, validate=validate)
    return [p for p in state.known_primes if p <= limit]


def eratosthenes(limit: int) -> List[int]:
    if limit < 2:
        raise ArgumentError(f'limit must be >= 2, got {limit}')
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime).tolist()


def next_prime(n: int) -> int:
    """Smallest prime greater than n"""
    return int(nextprime(n))


def largest_prime_below(x: int) -> int:
    if x <= 2:
        raise ArgumentError(f'there is no prime below {x}')
    return int(prevprime(x))


def frontier_sequence(iterations: int) -> List[int]:
    """7, then repeatedly the largest prime below the square of the previous entry"""
    if iterations < 1:
        raise ArgumentError(f'iterations must be >= 1, got {iterations}')
    sequence = [7]
    while len(sequence) < iterations:
        sequence.append(largest_prime_below(sequence[-1] ** 2))
    return sequence


def renumber_is_composite(xi: int, primes: List[int]) -> bool:
    """True iff a re-number of some listed prime is nonzero at xi.

    Only decides primality for p_N < xi < p_(N+1)^2, primes being the first N primes.
    """
    if not primes:
        raise ArgumentError('renumber_is_composite needs at least one prime')
    p_last = primes[-1]
    p_after = next_prime(p_last)
    if not p_last < xi < p_after * p_after:
        raise PhaseRangeError(f'xi={xi} is outside ({p_last}, {p_after * p_after})')
    return sum(1 for p in primes if xi % p == 0) > 0


def count_estimate(n: int) -> float:
    """7^(2(N-1)) / (2(N-1) ln 7), the prime-counting estimate at the N-th frontier"""
    if n < 2:
        raise ArgumentError(f'N must be >= 2, got {n}')
    k = 2 * (n - 1)
    return 7.0 ** k / (k * math.log(7))
