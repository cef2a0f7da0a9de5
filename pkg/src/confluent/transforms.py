"""Parameter-rewriting identities between the series, and stable evaluators.

The headline rewrite is phi(alpha, beta, x) = e^x phi(beta-alpha, beta, -x),
which turns an alternating sum into an all-positive one; stable_phi uses it
whenever x < 0 would otherwise shred the direct sum through cancellation.
chi_via_phi assembles the convergent two-series representation of chi, whose
two halves grow like e^x while their sum stays O(1), so it sums internally at
elevated precision before rounding once to a double.
"""

from __future__ import annotations

import math

import mpmath as mp

from .core import DEFAULT_CONTROL, EPS, POLE_TOL, EvalResult, SeriesControl
from .errors import DomainError, IntegerDifferenceError, NonConvergenceError, PoleError
from .series import PhiParams, phi

#: alpha - beta closer to an integer than this is refused by chi_via_phi
#: (the limiting form involves logarithms and is out of scope).
INTEGER_DIFF_TOL = 1e-6


def _is_nonpositive_integer(v: float, tol: float = POLE_TOL) -> bool:
    r = round(v)
    return r <= 0 and abs(v - r) <= tol


def kummer_first(p: PhiParams) -> tuple[float, PhiParams]:
    """Rewrite phi(alpha, beta, x) as e^x * phi(beta - alpha, beta, -x).

    Pure parameter rewrite; nothing is evaluated.
    """
    return math.exp(p.x), PhiParams(p.beta - p.alpha, p.beta, -p.x)


def psi_as_phi(alpha: float, x: float, sign: str = "-") -> tuple[float, PhiParams]:
    """Rewrite psi(alpha, x) as e^(s 2 sqrt(x)) * phi(alpha - 1/2, 2 alpha - 1, -s 4 sqrt(x)).

    `sign` picks s, the sign of the exponent in the scale factor; the series
    argument carries the opposite sign (the two pair up so that either choice
    reproduces psi, which is also forced by the e^x rewrite applied to one of
    them).  The "-" default keeps the scale factor below 1 for x > 0.

    Raises:
        DomainError: x < 0 or bad sign.
        PoleError: 2 alpha - 1 is zero or a negative integer.
    """
    if x < 0.0:
        raise DomainError(f"psi_as_phi requires x >= 0, got {x!r}")
    if sign not in ("+", "-"):
        raise DomainError(f"sign must be '+' or '-', got {sign!r}")
    b = 2.0 * alpha - 1.0
    if _is_nonpositive_integer(b):
        raise PoleError(
            f"phi parameter pole: 2*alpha - 1 = {b!r} is a non-positive integer"
        )
    s = 1.0 if sign == "+" else -1.0
    rx = math.sqrt(x)
    return math.exp(s * 2.0 * rx), PhiParams(alpha - 0.5, b, -s * 4.0 * rx)


def phi_2a_as_psi(alpha: float, x: float) -> tuple[float, tuple[float, float]]:
    """Rewrite phi(alpha, 2 alpha, x) as e^(x/2) * psi(alpha + 1/2, x^2/16).

    Returns the scale and the (alpha, x) argument pair for psi.

    Raises:
        PoleError: alpha + 1/2 is zero or a negative integer.
    """
    a2 = alpha + 0.5
    if _is_nonpositive_integer(a2):
        raise PoleError(
            f"psi parameter pole: alpha + 1/2 = {a2!r} is a non-positive integer"
        )
    return math.exp(x / 2.0), (a2, x * x / 16.0)


def _mp_phi(a, b, x, eps, cap):
    """phi series in the current mpmath context; returns (sum, nterms)."""
    term = mp.mpf(1)
    total = mp.mpf(1)
    small = 0
    k = 0
    while k < cap:
        term = term * (a + k) * x / ((b + k) * (k + 1))
        total += term
        if abs(term) <= eps * abs(total):
            small += 1
            if small >= 3:
                return total, k + 2
        else:
            small = 0
        k += 1
    raise NonConvergenceError(
        f"internal high-precision phi sum hit the {cap}-term cap", work=cap
    )


def chi_via_phi(
    alpha: float,
    beta: float,
    x: float,
    control: SeriesControl = DEFAULT_CONTROL,
) -> EvalResult:
    """Evaluate chi(alpha, beta, x) by its convergent two-series form:

        x^alpha Pi(beta-alpha-1)/Pi(beta-1) phi(alpha, alpha-beta+1, x)
      + x^beta  Pi(alpha-beta-1)/Pi(alpha-1) phi(beta,  beta-alpha+1, x)

    The two halves cancel to roughly e^x * x^(alpha+beta-1) below their own
    size, so the sum runs at a working precision sized to that loss and is
    rounded once at the end; the returned double carries a few-ulp error
    estimate.  Reciprocal-Gamma factors make a denominator pole suppress its
    term smoothly (beta = 0 collapses chi to 1, for instance).

    Raises:
        DomainError: x <= 0.
        IntegerDifferenceError: alpha - beta within 1e-6 of an integer.
    """
    if x <= 0.0:
        raise DomainError(f"chi_via_phi requires x > 0, got {x!r}")
    d = alpha - beta
    if abs(d - round(d)) < INTEGER_DIFF_TOL:
        raise IntegerDifferenceError(
            f"alpha - beta = {d!r} is (nearly) an integer; two-series form invalid"
        )
    # digits lost to cancellation ~ log10(e^x x^(alpha+beta-1)) plus slack
    loss = 0.4343 * x + (abs(alpha) + abs(beta) + 2.0) * math.log10(max(x, 2.0))
    dps = 22 + int(loss)
    cap = max(control.max_terms, int(4.0 * x) + 400)
    with mp.workdps(dps):
        a = mp.mpf(alpha)
        b = mp.mpf(beta)
        xx = mp.mpf(x)
        eps = mp.mpf(10) ** (-(dps - 6))
        s1, w1 = _mp_phi(a, a - b + 1, xx, eps, cap)
        s2, w2 = _mp_phi(b, b - a + 1, xx, eps, cap)
        t1 = mp.power(xx, a) * mp.gamma(b - a) * mp.rgamma(b) * s1
        t2 = mp.power(xx, b) * mp.gamma(a - b) * mp.rgamma(a) * s2
        value = float(t1 + t2)
    err = max(4.0 * EPS * abs(value), 5e-324)
    return EvalResult(value, err, w1 + w2, "transformed_series")


def stable_phi(p: PhiParams, control: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """phi with the e^x rewrite applied whenever it buys stability.

    For x < 0 with beta - alpha > 0 the rewritten series has all positive
    terms, so that path is taken and tagged transformed_series; otherwise the
    call is exactly phi(p).
    """
    if p.x < 0.0 and (p.beta - p.alpha) > 0.0:
        scale, q = kummer_first(p)
        r = phi(q, control)
        value = scale * r.value
        err = scale * r.abs_err_est + 2.0 * EPS * abs(value)
        return EvalResult(value, err, r.work, "transformed_series")
    return phi(p, control)
