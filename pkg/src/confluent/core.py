"""Scalar layer: the factorial function Pi and shared result containers.

Pi extends the factorial off the integers, Pi(z) = Gamma(z + 1), so that
Pi(n) = n! and Pi(a - 1) equals the Euler integral of u^(a-1) e^(-u).  That
identification is what fixes every closed-form prefactor assembled here.

All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PoleError

#: Arguments within this absolute distance of a negative integer are poles.
POLE_TOL = 1e-12

EPS = math.ulp(1.0)

_LOG_HUGE = 709.0   # log of the largest finite double, rounded down
_LOG_TINY = -745.0

_METHODS = frozenset(
    {"direct_series", "transformed_series", "asymptotic", "closed_form", "quadrature"}
)


def _pole_index(w: float) -> int | None:
    """Return m >= 0 if w is within POLE_TOL of the Gamma pole -m, else None."""
    if w > 0.5:
        return None
    m = round(w)
    if m <= 0 and abs(w - m) <= POLE_TOL:
        return -int(m)
    return None


def _gamma_sign(w: float) -> int:
    """Sign of Gamma(w) for non-pole w."""
    if w > 0.0:
        return 1
    return 1 if math.floor(w) % 2 == 0 else -1


def pi_fn(z: float) -> float:
    """Pi(z) = Gamma(z + 1).

    Accurate to better than 12 significant digits for |z| <= 50 (delegates to
    the platform Gamma, which uses reflection for negative arguments).

    Raises:
        PoleError: z within POLE_TOL of a negative integer.
    """
    w = z + 1.0
    if _pole_index(w) is not None:
        raise PoleError(f"Pi(z) has a pole at z = {z!r}")
    return math.gamma(w)


def reciprocal_pi(z: float) -> float:
    """1 / Pi(z), defined for every real z; exactly 0.0 at the poles of Pi.

    Used wherever a prefactor must vanish smoothly when a Pi denominator
    blows up (term suppression in two-series representations).
    """
    w = z + 1.0
    if _pole_index(w) is not None:
        return 0.0
    try:
        g = math.gamma(w)
    except OverflowError:
        return 0.0
    if g != 0.0 and math.isfinite(g):
        return 1.0 / g
    # platform gamma under/overflowed silently; go through log space
    lg = math.lgamma(w)
    if lg > -_LOG_TINY:
        return 0.0
    if -lg > _LOG_HUGE:
        s = _gamma_sign(w)
        return math.inf if s > 0 else -math.inf
    return _gamma_sign(w) * math.exp(-lg)


def log_pi_abs(z: float) -> tuple[float, int]:
    """(log |Pi(z)|, sign of Pi(z)) for overflow-safe prefactor ratios.

    Raises:
        PoleError: z within POLE_TOL of a negative integer.
    """
    w = z + 1.0
    if _pole_index(w) is not None:
        raise PoleError(f"Pi(z) has a pole at z = {z!r}")
    return math.lgamma(w), _gamma_sign(w)


def pi_ratio(num=(), den=(), log_scale: float = 0.0) -> float:
    """exp(log_scale) * prod Pi(n_i) / prod Pi(d_j), computed in log space.

    Sign is tracked separately so ratios that change sign with the fractional
    parts of their arguments come out right.  A pole among the denominators
    makes the whole product vanish (returns 0.0).  A pole among the
    numerators raises, including the indeterminate pole-over-pole case.
    """
    num_pole = any(_pole_index(n + 1.0) is not None for n in num)
    den_pole = any(_pole_index(d + 1.0) is not None for d in den)
    if num_pole:
        raise PoleError("Pi pole among ratio numerators")
    if den_pole:
        return 0.0
    total = log_scale
    sign = 1
    for n in num:
        lg, s = log_pi_abs(n)
        total += lg
        sign *= s
    for d in den:
        lg, s = log_pi_abs(d)
        total -= lg
        sign *= s
    if total > _LOG_HUGE:
        return math.inf if sign > 0 else -math.inf
    if total < _LOG_TINY:
        return sign * 0.0
    return sign * math.exp(total)


@dataclass(frozen=True)
class SeriesControl:
    """Tolerance and term-budget policy for convergent summation."""

    rel_tol: float = 1e-14
    max_terms: int = 1200

    def __post_init__(self):
        if not (0.0 < self.rel_tol < 1.0):
            raise ValueError(f"rel_tol must lie in (0, 1), got {self.rel_tol!r}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms!r}")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class EvalResult:
    """Value with an error estimate, a work counter, and a method tag."""

    value: float
    abs_err_est: float
    work: int
    method: str

    def __post_init__(self):
        if self.abs_err_est < 0.0:
            raise ValueError("abs_err_est must be >= 0")
        if self.work < 0:
            raise ValueError("work must be >= 0")
        if self.method not in _METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
