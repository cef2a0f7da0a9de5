"""The three power series, semiconvergent truncation, and closed 2F1 values.

phi(alpha, beta, x)  sum_k  (alpha)_k x^k / ((beta)_k k!)      entire in x
psi(alpha, x)        sum_k  x^k / ((alpha)_k k!)               entire in x
chi(alpha, beta, x)  sum_k  (-1)^k (alpha)_k (beta)_k/(k! x^k) semiconvergent

chi diverges for every x, but its partial sums first close in on the true
value and then recede; truncating at the smallest term gives a bracket whose
endpoints enclose the true value.  chi_partial and chi_eval_optimal implement
that truncation theory.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from .core import DEFAULT_CONTROL, EPS, POLE_TOL, EvalResult, SeriesControl, pi_ratio
from .errors import DegenerateBracketWarning, DomainError, NonConvergenceError, PoleError

_LN2 = math.log(2.0)


def _is_nonpositive_integer(v: float, tol: float = POLE_TOL) -> bool:
    r = round(v)
    return r <= 0 and abs(v - r) <= tol


@dataclass(frozen=True)
class PhiParams:
    """Parameter triple for phi; beta must stay off the non-positive integers."""

    alpha: float
    beta: float
    x: float

    def __post_init__(self):
        if _is_nonpositive_integer(self.beta):
            raise DomainError(
                f"phi series undefined: beta = {self.beta!r} is a non-positive integer"
            )


def _neumaier_add(total: float, comp: float, term: float) -> tuple[float, float]:
    t = total + term
    if abs(total) >= abs(term):
        comp += (total - t) + term
    else:
        comp += (term - t) + total
    return t, comp


def phi(p: PhiParams, control: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Sum the phi series directly with compensated accumulation.

    Stops once |term| <= rel_tol * |partial| holds for 3 consecutive terms
    (a single accidentally small term must not end the sum).

    Raises:
        NonConvergenceError: max_terms reached before the stopping rule fired.
    """
    a, b, x = p.alpha, p.beta, p.x
    term = 1.0
    total, comp = 1.0, 0.0
    gross = 1.0
    small = 0
    for k in range(control.max_terms):
        term = term * (a + k) * x / ((b + k) * (k + 1.0))
        total, comp = _neumaier_add(total, comp, term)
        gross += abs(term)
        if abs(term) <= control.rel_tol * abs(total + comp):
            small += 1
            if small >= 3:
                value = total + comp
                # gross tracks cancellation: term-generation rounding scales
                # with the gross term mass, not with the final value, and
                # drifts with the recurrence length
                err = max(2.0 * abs(term), (4.0 + 0.25 * k) * EPS * gross)
                return EvalResult(value, err, k + 2, "direct_series")
        else:
            small = 0
    raise NonConvergenceError(
        f"phi{(a, b, x)} did not meet the stopping rule in {control.max_terms} terms",
        value=total + comp,
        work=control.max_terms,
    )


def psi(alpha: float, x: float, control: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Sum the psi series directly; same stopping rule as phi.

    Raises:
        PoleError: alpha is zero or a negative integer.
        NonConvergenceError: term budget exhausted.
    """
    if _is_nonpositive_integer(alpha):
        raise PoleError(f"psi series undefined at alpha = {alpha!r}")
    term = 1.0
    total, comp = 1.0, 0.0
    gross = 1.0
    small = 0
    for k in range(control.max_terms):
        term = term * x / ((alpha + k) * (k + 1.0))
        total, comp = _neumaier_add(total, comp, term)
        gross += abs(term)
        if abs(term) <= control.rel_tol * abs(total + comp):
            small += 1
            if small >= 3:
                value = total + comp
                err = max(2.0 * abs(term), (4.0 + 0.25 * k) * EPS * gross)
                return EvalResult(value, err, k + 2, "direct_series")
        else:
            small = 0
    raise NonConvergenceError(
        f"psi{(alpha, x)} did not meet the stopping rule in {control.max_terms} terms",
        value=total + comp,
        work=control.max_terms,
    )


@dataclass(frozen=True)
class ChiPartialSums:
    """Terms and prefix sums of the chi series, with the optimal index.

    terms[k] is the float product of the running recurrence
    term(k+1) = -term(k) (alpha+k)(beta+k) / ((k+1) x), and partials[k] is the
    plain cumulative sum, so partials[k] == partials[k-1] + terms[k] holds as
    a float identity (no compensation is applied, on purpose).  log_mags
    tracks |term| in log space so overflow cannot corrupt k_opt.
    """

    alpha: float
    beta: float
    x: float
    terms: tuple[float, ...]
    partials: tuple[float, ...]
    k_opt: int
    log_mags: tuple[float, ...] = field(repr=False, default=())

    def bound_printed(self, k: int) -> float:
        """k * |term_k|, the displayed remainder bound for the k-term sum."""
        return k * math.exp(self.log_mags[k])


def chi_partial(alpha: float, beta: float, x: float, kmax: int) -> ChiPartialSums:
    """Terms and partial sums of chi for k = 0..kmax.

    Raises:
        DomainError: x <= 0 or kmax < 1.
    """
    if x <= 0.0:
        raise DomainError(f"chi series requires x > 0, got {x!r}")
    if kmax < 1:
        raise DomainError(f"kmax must be >= 1, got {kmax!r}")
    terms = [1.0]
    partials = [1.0]
    log_mags = [0.0]
    term = 1.0
    lm = 0.0
    dead = False
    for k in range(kmax):
        num = (alpha + k) * (beta + k)
        if dead or num == 0.0:
            dead = True
            term = 0.0
            lm = -math.inf
        else:
            ratio = num / ((k + 1.0) * x)
            term = -term * ratio
            lm = lm + math.log(abs(ratio))
        terms.append(term)
        partials.append(partials[-1] + term)
        log_mags.append(lm)
    k_opt = min(range(len(log_mags)), key=lambda i: (log_mags[i], i))
    return ChiPartialSums(
        alpha, beta, x, tuple(terms), tuple(partials), k_opt, tuple(log_mags)
    )


@dataclass(frozen=True)
class ChiBracket:
    """Enclosure of the semiconvergent sum at optimal truncation.

    lower/upper are the consecutive partial sums straddling the true value at
    the smallest term.  Two remainder bounds are exposed because the source
    states two inequalities that differ by a factor k: the first omitted term
    and the displayed k*|term_k| form.  Tests decide which is sharper.
    """

    lower: float
    upper: float
    k_opt: int
    bound_first_omitted: float
    bound_printed: float

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.upper - self.lower)

    def rounding_slack(self) -> float:
        """Float fuzz of the endpoints themselves.

        The enclosure statement is exact for exact partial sums; the stored
        endpoints carry one rounding per accumulated term, which matters once
        the bracket narrows to a few ulps (large x).
        """
        scale = max(1.0, abs(self.lower), abs(self.upper))
        return 4.0 * EPS * (self.k_opt + 2.0) * scale

    def contains(self, value: float, slack: float | None = None) -> bool:
        """Whether value lies in the bracket, allowing endpoint rounding."""
        s = self.rounding_slack() if slack is None else slack
        return self.lower - s <= value <= self.upper + s

    def to_eval_result(self) -> EvalResult:
        return EvalResult(
            self.midpoint,
            self.half_width + self.rounding_slack(),
            self.k_opt + 2,
            "asymptotic",
        )


def chi_eval_optimal(
    alpha: float, beta: float, x: float, max_terms: int = 20000
) -> ChiBracket:
    """Bracket chi(alpha, beta, x) by truncating at the smallest term.

    Requires alpha, beta, x > 0, the regime in which consecutive partial sums
    alternate around the true value (beta + k > 0 keeps the remainder form
    one-signed).  Terms are generated until their magnitude starts to grow;
    the minimum defines k_opt.

    Warns:
        DegenerateBracketWarning: budget reached before the terms grew.
    """
    if alpha <= 0.0 or beta <= 0.0 or x <= 0.0:
        raise DomainError(
            f"chi_eval_optimal requires alpha, beta, x > 0, got {(alpha, beta, x)!r}"
        )
    terms = [1.0]
    partials = [1.0]
    log_mags = [0.0]
    k_opt = None
    for k in range(max_terms):
        ratio = (alpha + k) * (beta + k) / ((k + 1.0) * x)
        terms.append(-terms[-1] * ratio)
        partials.append(partials[-1] + terms[-1])
        log_mags.append(log_mags[-1] + math.log(ratio))
        if log_mags[-1] >= log_mags[-2]:
            k_opt = k
            break
    if k_opt is None:
        warnings.warn(
            f"term magnitudes still shrinking after {max_terms} terms at "
            f"{(alpha, beta, x)!r}; bracket truncated at the budget",
            DegenerateBracketWarning,
            stacklevel=2,
        )
        k_opt = len(terms) - 2
    if k_opt >= 1:
        lo, hi = partials[k_opt - 1], partials[k_opt]
    else:
        lo, hi = partials[0], partials[1]
    if lo > hi:
        lo, hi = hi, lo
    first_omitted = math.exp(log_mags[k_opt + 1])
    return ChiBracket(lo, hi, k_opt, first_omitted, (k_opt + 1) * first_omitted)


@dataclass(frozen=True)
class CoeffSeq:
    """Coefficients generated by one of the two three-term recurrences."""

    kind: str
    coeffs: tuple[float, ...]
    params: tuple[float, float, float]


def coeff_recurrence(
    kind: str,
    alpha: float,
    beta: float,
    gamma: float,
    seeds: list[float],
    n: int,
) -> CoeffSeq:
    """Generate coefficients 0..n of the A or B power-series ansatz.

    A_seq: (alpha+k) A_k + gamma (k+1) A_{k+1} = (k+1)(k+2)(k+2-beta) A_{k+2},
    seeded with (A_0, A_1).  B_seq: (alpha+beta+k) B_k + gamma (beta+k+1)
    B_{k+1} = (beta+k+1)(beta+k+2)(k+2) B_{k+2}, seeded with (B_0,); B_1
    follows from the k = -1 relation as gamma B_0 / (beta + 1).

    Raises:
        DomainError: wrong seed count, n < 0, or a vanishing denominator
            (the offending index is named).
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    if kind == "A_seq":
        if len(seeds) != 2:
            raise DomainError("A_seq needs exactly 2 seeds (A_0, A_1)")
        c = [float(seeds[0]), float(seeds[1])]
        for k in range(n - 1):
            den = (k + 1.0) * (k + 2.0) * (k + 2.0 - beta)
            if den == 0.0:
                raise DomainError(f"A_seq denominator vanishes at k = {k}")
            c.append(((alpha + k) * c[k] + gamma * (k + 1.0) * c[k + 1]) / den)
    elif kind == "B_seq":
        if len(seeds) != 1:
            raise DomainError("B_seq needs exactly 1 seed (B_0,)")
        if beta + 1.0 == 0.0:
            raise DomainError("B_seq denominator vanishes at k = -1")
        c = [float(seeds[0]), gamma * float(seeds[0]) / (beta + 1.0)]
        for k in range(n - 1):
            den = (beta + k + 1.0) * (beta + k + 2.0) * (k + 2.0)
            if den == 0.0:
                raise DomainError(f"B_seq denominator vanishes at k = {k}")
            c.append(
                ((alpha + beta + k) * c[k] + gamma * (beta + k + 1.0) * c[k + 1]) / den
            )
    else:
        raise DomainError(f"kind must be 'A_seq' or 'B_seq', got {kind!r}")
    return CoeffSeq(kind, tuple(c[: n + 1]), (alpha, beta, gamma))


def gauss_2f1_at_1(c: float, a: float, b: float) -> float:
    """F(c, a; b; 1) through its Pi-ratio closed form.

    Valid for b - a - c > 0 (convergence of the series at unit argument).

    Raises:
        DomainError: b - a - c <= 0.
        PoleError: a Pi numerator pole.
    """
    if b - a - c <= 0.0:
        raise DomainError(
            f"F(c, a; b; 1) diverges: need b - a - c > 0, got {b - a - c!r}"
        )
    return pi_ratio(num=(b - 1.0, b - a - c - 1.0), den=(b - a - 1.0, b - c - 1.0))


def kummer_2f1_at_minus1(alpha: float, beta: float) -> float:
    """F(alpha, beta; alpha - beta + 1; -1) through its closed form.

    The third parameter is alpha - beta + 1 by construction; the value is
    2^(-alpha) sqrt(pi) Pi(alpha-beta) / (Pi(alpha/2 - beta) Pi((alpha-1)/2)).

    Raises:
        PoleError: a Pi numerator pole.
    """
    return pi_ratio(
        num=(alpha - beta,),
        den=(alpha / 2.0 - beta, (alpha - 1.0) / 2.0),
        log_scale=0.5 * math.log(math.pi) - alpha * _LN2,
    )
