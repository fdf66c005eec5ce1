# conf.py - library settings, tolerances and precision selection
import logging
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Literal, Optional

import mpmath
from pydantic import BaseModel, ConfigDict, Field

logger = logging.getLogger(__name__)

Precision = Literal['double', 'high']

_precision_override: ContextVar[Optional[str]] = ContextVar('waves_precision', default=None)
_tolerance_override: ContextVar[Optional['Tolerance']] = ContextVar('waves_tolerance', default=None)


class WaveSettings(BaseModel):
    """Validated view of the WAVES settings dict"""

    model_config = ConfigDict(frozen=True, extra='ignore')

    precision: Precision = 'double'
    high_precision_digits: int = Field(default=50, ge=50)
    abs_eps: float = Field(default=1e-9, ge=0, allow_inf_nan=False)
    rel_eps: float = Field(default=1e-9, ge=0, allow_inf_nan=False)
    max_sieve_limit: int = Field(default=10 ** 7, ge=3)
    log_level: str = 'WARNING'


class Tolerance(BaseModel):
    model_config = ConfigDict(frozen=True)

    abs_eps: float = Field(default=1e-9, ge=0, allow_inf_nan=False)
    rel_eps: float = Field(default=1e-9, ge=0, allow_inf_nan=False)

    @classmethod
    def default(cls) -> 'Tolerance':
        """Tolerance of the enclosing use_tolerance block, else the configured eps values"""
        override = _tolerance_override.get()
        if override is not None:
            return override
        conf = get_wave_settings()
        return cls(abs_eps=conf.abs_eps, rel_eps=conf.rel_eps)

    def close(self, a: complex, b: complex) -> bool:
        return abs(a - b) <= self.abs_eps + self.rel_eps * max(abs(a), abs(b))


def get_wave_settings() -> WaveSettings:
    """Read WAVES from Django settings, falling back to defaults outside a configured project"""
    try:
        from django.conf import settings
        if settings.configured:
            return WaveSettings(**getattr(settings, 'WAVES', {}))
    except ImportError:
        pass
    return WaveSettings()


def resolve_tolerance(tol: Optional[Tolerance]) -> Tolerance:
    return tol if tol is not None else Tolerance.default()


def current_precision() -> str:
    return _precision_override.get() or get_wave_settings().precision


def is_high_precision() -> bool:
    return current_precision() == 'high'


@contextmanager
def use_precision(mode: str, digits: Optional[int] = None) -> Iterator[None]:
    """Run a block in double or high precision; high precision also raises mpmath's working digits"""
    if mode not in ('double', 'high'):
        from .exceptions import ArgumentError
        raise ArgumentError(f'unknown precision mode {mode!r}')
    token = _precision_override.set(mode)
    try:
        if mode == 'high':
            dps = digits or get_wave_settings().high_precision_digits
            logger.debug(f'switching to high precision ({dps} digits)')
            with mpmath.workdps(dps):
                yield
        else:
            yield
    finally:
        _precision_override.reset(token)


@contextmanager
def use_tolerance(tol: Tolerance) -> Iterator[None]:
    token = _tolerance_override.set(tol)
    try:
        yield
    finally:
        _tolerance_override.reset(token)
