"""Numerical quadrature oracle for the two integral shapes in the catalog.

Semi-infinite integrals with exponential decay (and possibly an algebraic
endpoint singularity or an essential exp(-x/u) factor at 0) go through a
double-exponential change of variable with panel doubling.  Oscillatory
integrals on [0, pi/2) with a tan-type phase are mapped by t = tan v onto
[0, inf), integrated lobe by lobe between consecutive phase zeros, and the
alternating lobe series is accelerated by iterated averaging of partial sums.

This module is the cross-check of record: it never imports the series or
transform code and only evaluates integrand callables handed to it.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SlowDecayWarning

_EVAL_CAP = 1 << 21
_ES_TMAX = 6.8        # exp(pi/2 sinh t) stays inside double range
_TS_TMAX = 5.9
_ERR_INFLATION = 4.0  # safety factor on the last two refinement levels
_MACH_EPS = math.ulp(1.0)


@dataclass(frozen=True)
class QuadResult:
    """Oracle output: value, error estimate, evaluation count, convergence."""

    value: float
    abs_err_est: float
    n_evals: int
    converged: bool


class _Counter:
    __slots__ = ("n",)

    def __init__(self):
        self.n = 0

    def over_budget(self) -> bool:
        return self.n >= _EVAL_CAP


def _count(f, counter):
    def g(u):
        counter.n += 1
        return f(u)

    return g


# ---------------------------------------------------------------------------
# double-exponential rules


def _exp_sinh_level(g, a, h, counter):
    """Trapezoid sum of g(u(t)) u'(t) at step h for u = a + exp(pi/2 sinh t)."""
    half_pi = 0.5 * math.pi

    def node(t):
        e = half_pi * math.sinh(t)
        u = a + math.exp(e)
        w = half_pi * math.cosh(t) * math.exp(e)
        val = g(u) * w
        return val if math.isfinite(val) else 0.0

    total = node(0.0)
    for direction in (1.0, -1.0):
        tiny_run = 0
        k = 1
        while k * h <= _ES_TMAX and not counter.over_budget():
            t = direction * k * h
            v = node(t)
            total += v
            scale = abs(total) if total != 0.0 else 1.0
            if abs(v) <= 1e-17 * scale:
                tiny_run += 1
                if tiny_run >= 3 and k * h >= 2.0:
                    break
            else:
                tiny_run = 0
            k += 1
    return h * total


def _exp_sinh(f, a, abs_tol, rel_tol, counter):
    """Integrate f over (a, inf) by panel-doubled exp-sinh trapezoids."""
    g = _count(f, counter)
    prev = None
    value = 0.0
    err = math.inf
    h = 1.0
    for level in range(12):
        value = _exp_sinh_level(g, a, h, counter)
        if prev is not None:
            err = _ERR_INFLATION * abs(value - prev)
            if level >= 3 and err <= max(abs_tol, rel_tol * abs(value)):
                return value, err, True
        prev = value
        h *= 0.5
        if counter.over_budget():
            break
    return value, err, False


def _tanh_sinh_level(g, a, b, h, counter):
    half = 0.5 * (b - a)
    half_pi = 0.5 * math.pi

    def node(t):
        u = half_pi * math.sinh(t)
        ch = math.cosh(u)
        if math.isinf(ch):
            return 0.0
        w = half * half_pi * math.cosh(t) / (ch * ch)
        if w == 0.0:
            return 0.0
        # measure the abscissa from its nearer endpoint so endpoint
        # singularities see exact small gaps
        if u < 0.0:
            gap = half * math.exp(u) / ch
            if gap <= 0.0:
                return 0.0
            x = a + gap
        else:
            gap = half * math.exp(-u) / ch
            if gap <= 0.0:
                return 0.0
            x = b - gap
        if x <= a or x >= b:
            return 0.0
        val = g(x) * w
        return val if math.isfinite(val) else 0.0

    total = node(0.0)
    for direction in (1.0, -1.0):
        tiny_run = 0
        k = 1
        while k * h <= _TS_TMAX and not counter.over_budget():
            v = node(direction * k * h)
            total += v
            scale = abs(total) if total != 0.0 else 1.0
            if abs(v) <= 1e-17 * scale:
                tiny_run += 1
                if tiny_run >= 3 and k * h >= 1.5:
                    break
            else:
                tiny_run = 0
            k += 1
    return h * total


def _tanh_sinh(f, a, b, abs_tol, rel_tol, counter):
    """Integrate f over (a, b), tolerating integrable endpoint singularities."""
    g = _count(f, counter)
    prev = None
    value = 0.0
    err = math.inf
    h = 1.0
    for level in range(12):
        value = _tanh_sinh_level(g, a, b, h, counter)
        if prev is not None:
            err = _ERR_INFLATION * abs(value - prev)
            if level >= 3 and err <= max(abs_tol, rel_tol * abs(value)):
                return value, err, True
        prev = value
        h *= 0.5
        if counter.over_budget():
            break
    return value, err, False


# ---------------------------------------------------------------------------
# fixed Gauss rules and adaptive fallback

_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl_nodes(n):
    if n not in _GL_CACHE:
        xs, ws = np.polynomial.legendre.leggauss(n)
        _GL_CACHE[n] = (xs, ws)
    return _GL_CACHE[n]


def _gl(f, a, b, n, counter):
    xs, ws = _gl_nodes(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    counter.n += n
    return float(half * sum(w * f(mid + half * x) for x, w in zip(xs, ws)))


def _adaptive_gauss(f, a, b, abs_tol, counter, max_depth=52):
    """Adaptive bisection with a (10, 21)-point Gauss pair error estimate."""
    stack = [(a, b, abs_tol, 0)]
    total = 0.0
    err = 0.0
    while stack:
        lo, hi, tol, depth = stack.pop()
        coarse = _gl(f, lo, hi, 10, counter)
        fine = _gl(f, lo, hi, 21, counter)
        e = abs(fine - coarse)
        if e <= tol or depth >= max_depth or counter.over_budget():
            total += fine
            err += e
        else:
            mid = 0.5 * (lo + hi)
            stack.append((lo, mid, 0.5 * tol, depth + 1))
            stack.append((mid, hi, 0.5 * tol, depth + 1))
    return total, err


# ---------------------------------------------------------------------------
# iterated averaging for alternating lobe series


def _averaged(partials):
    """Collapse partial sums by repeated pairwise averaging.

    Returns (estimate, spread) where spread is the change contributed by the
    final averaging stage, a usable error scale for alternating sequences.
    """
    row = list(partials)
    prev_top = row[-1]
    while len(row) > 1:
        prev_top = row[-1]
        row = [0.5 * (row[i] + row[i + 1]) for i in range(len(row) - 1)]
    return row[0], abs(row[0] - prev_top)


# ---------------------------------------------------------------------------
# public entry points


def integrate_semi_infinite(spec, abs_tol: float = 1e-10, rel_tol: float = 1e-10) -> QuadResult:
    """Integrate a semi_infinite spec over (0, inf).

    An essential exp(-x/u)-type factor at u = 0 (declared through
    spec.inverse_arg = x) is removed exactly: the integral is split at
    m = min(1, x) and the left piece remapped by u -> x/w, turning it into a
    second exponentially decaying tail integral.  Algebraic u^sigma endpoint
    behavior with sigma > -1 is absorbed by the variable change itself.
    """
    if spec.kind != "semi_infinite":
        raise DomainError(f"expected a semi_infinite spec, got kind {spec.kind!r}")
    counter = _Counter()
    f = spec.integrand
    inv = getattr(spec, "inverse_arg", None)
    if inv is not None and inv > 0.0:
        m = min(1.0, inv)

        def left(w):
            return f(inv / w) * inv / (w * w)

        v1, e1, c1 = _exp_sinh(f, m, 0.5 * abs_tol, 0.5 * rel_tol, counter)
        v2, e2, c2 = _exp_sinh(left, inv / m, 0.5 * abs_tol, 0.5 * rel_tol, counter)
        value, err, ok = v1 + v2, e1 + e2, c1 and c2
    else:
        value, err, ok = _exp_sinh(f, 0.0, abs_tol, rel_tol, counter)
    pf = spec.prefactor
    return QuadResult(pf * value, abs(pf) * err, counter.n, ok)


def _phase_invert(c, g, p0, target, lo, hi_hint):
    """Solve c t + g atan(t) + p0 = target for t on the monotone tail."""

    def theta(t):
        return c * t + g * math.atan(t) + p0

    hi = max(hi_hint, lo + 1e-9)
    while theta(hi) < target:
        hi = 2.0 * hi + 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if theta(mid) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def _transformed_amplitude(spec):
    sp = spec.sin_power
    cp = spec.cos_power
    extra = spec.amp_extra
    p = -(sp + cp) / 2.0 - 1.0

    def A(t):
        amp = (t ** sp if sp != 0.0 else 1.0) * (1.0 + t * t) ** p
        if extra is not None:
            amp *= extra(math.atan(t))
        return amp

    return A


def integrate_tan_oscillatory(
    spec,
    abs_tol: float = 1e-10,
    rel_tol: float = 1e-10,
    strategy: str = "auto",
) -> QuadResult:
    """Integrate a tan_oscillatory spec over [0, pi/2).

    strategy "auto" substitutes t = tan v, giving an algebraically decaying
    oscillatory integrand trig(c t + g atan t + p0) with amplitude
    t^sin_power (1+t^2)^(-(sin_power+cos_power)/2 - 1); a head piece covering
    any non-monotone phase region (and any amplitude sign changes declared by
    head_min_t) is integrated by a tanh-sinh rule, then successive lobes
    between phase zeros are summed with alternating-series acceleration.
    strategy "direct" integrates on [0, pi/2) by adaptive subdivision with a
    truncated tail bound, usable as an independent fallback when x is small.
    A vanishing tan coefficient falls back to a plain tanh-sinh rule.

    Warns:
        SlowDecayWarning: amplitude powers give less than unit combined decay.
    """
    if spec.kind != "tan_oscillatory":
        raise DomainError(f"expected a tan_oscillatory spec, got kind {spec.kind!r}")
    if spec.sin_power + spec.cos_power <= -1.0:
        warnings.warn(
            "slowly decaying oscillatory amplitude; relying on tail acceleration",
            SlowDecayWarning,
            stacklevel=2,
        )
    counter = _Counter()
    pf = spec.prefactor
    c = spec.tan_coeff

    if strategy not in ("auto", "direct", "transform"):
        raise DomainError(f"unknown strategy {strategy!r}")

    if abs(c) <= 1e-12:
        # no tan-type oscillation: plain singularity-tolerant rule in v space
        value, err, ok = _tanh_sinh(
            spec.integrand, 0.0, 0.5 * math.pi, abs_tol, rel_tol, counter
        )
        return QuadResult(pf * value, abs(pf) * err, counter.n, ok)

    if strategy == "direct":
        return _tan_direct(spec, abs_tol, rel_tol, counter)

    g = spec.v_coeff
    p0 = spec.phase_offset
    trig = math.cos if spec.trig == "cos" else math.sin
    A = _transformed_amplitude(spec)

    def F(t):
        return A(t) * trig(c * t + g * math.atan(t) + p0)

    # monotone phase beyond t*; amplitude sign fixed beyond head_min_t
    t_star = math.sqrt(max(0.0, -g / c - 1.0)) if g < 0.0 else 0.0
    head_min = max(t_star * 1.0000001, spec.head_min_t, 0.0)
    theta_head = c * head_min + g * math.atan(head_min) + p0
    offset = 0.5 * math.pi if spec.trig == "cos" else 0.0
    m0 = math.ceil((theta_head - offset) / math.pi + 1e-9)
    z0 = offset + m0 * math.pi
    t0 = _phase_invert(c, g, p0, z0, head_min, head_min + math.pi / c)

    head, head_err, head_ok = _tanh_sinh(
        F, 0.0, t0, 0.1 * abs_tol, 0.1 * rel_tol, counter
    )

    partials = [head]
    lobe_err = 0.0
    prev_t = t0
    prev_est = None
    est = head
    delta = math.inf
    stable = 0
    ok = False
    max_lobes = 600
    for j in range(1, max_lobes + 1):
        tj = _phase_invert(c, g, p0, z0 + j * math.pi, prev_t, prev_t + math.pi / c)
        coarse = _gl(F, prev_t, tj, 16, counter)
        fine = _gl(F, prev_t, tj, 32, counter)
        # the pair difference bounds the 16-point error; the 32-point rule is
        # far more accurate on a single smooth lobe, so charge a small factor
        lobe_err += 1e-3 * abs(fine - coarse) + 8.0 * _MACH_EPS * abs(fine)
        partials.append(partials[-1] + fine)
        prev_t = tj
        if len(partials) >= 5:
            est, spread = _averaged(partials[-48:])
            tol = max(abs_tol, rel_tol * abs(est))
            if prev_est is not None:
                delta = abs(est - prev_est)
                if delta + spread <= 0.25 * tol:
                    stable += 1
                    if stable >= 2:
                        ok = True
                        break
                else:
                    stable = 0
            prev_est = est
        if counter.over_budget():
            break

    err = _ERR_INFLATION * delta + head_err + lobe_err
    if not math.isfinite(err):
        err = abs(est) if est != 0.0 else 1.0
        ok = False
    # converged must imply the estimate sits within the requested tolerance
    converged = ok and head_ok and err <= max(abs_tol, rel_tol * abs(est))
    return QuadResult(pf * est, abs(pf) * err, counter.n, converged)


def _tan_direct(spec, abs_tol, rel_tol, counter):
    """Adaptive subdivision on [0, cutoff] plus an amplitude tail bound."""
    cp = spec.cos_power
    if cp <= -1.0:
        raise DomainError("direct strategy needs cos_power > -1 for the tail bound")
    f = _count(spec.integrand, counter)
    # amplitude envelope constant near pi/2: |amp| <= M cos^cp
    vs = [0.5 * math.pi - 1e-3 * (k + 1) for k in range(64)]
    M = 1.0
    for v in vs:
        cosv = math.cos(v)
        env = abs(spec.integrand(v)) / (cosv ** cp) if cosv > 0 else 0.0
        M = max(M, 1.5 * env)
    counter.n += len(vs)
    tail_goal = 0.3 * abs_tol
    gap = (tail_goal * (cp + 1.0) / M) ** (1.0 / (cp + 1.0))
    gap = min(max(gap, 1e-12), 0.5)
    cutoff = 0.5 * math.pi - gap
    tail_bound = M * gap ** (cp + 1.0) / (cp + 1.0)
    value, err = _adaptive_gauss(f, 0.0, cutoff, 0.5 * abs_tol, counter)
    total_err = err + tail_bound
    pf = spec.prefactor
    converged = total_err <= max(abs_tol, rel_tol * abs(value))
    return QuadResult(pf * value, abs(pf) * total_err, counter.n, converged)
