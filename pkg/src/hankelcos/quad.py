"""
Damped oscillatory quadrature on the half line.

The engine integrates ``f`` over ``[0, inf)`` interval by interval.  The
breakpoints sit at zeros of the oscillatory factor, so the interval
contributions form a (nearly) geometric, sign-alternating sequence whose
partial sums are accelerated with Wynn's epsilon algorithm.  A
logarithmic endpoint singularity at ``x = 0`` is removed by subtracting a
model ``log(x) * sum_j c_j exp(-s_j x)``, which is integrated in closed
form over the first interval; the smooth remainder there is integrated on
a graded mesh.

On top of the engine sit the damped Hankel cosine transform, its
``beta -> 0`` extrapolation, and the elementary damped log-trigonometric
integrals used when fixing integration constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .branch import TransformPoint
from .errors import DomainError, IllConditioned, NoConvergence
from .rational import damped_cosine_moment
from .specfun import DEFAULT_CONFIG, SeriesConfig, hankel2_0

__all__ = [
    "RegularizationSchedule",
    "PartitionPlan",
    "QuadratureResult",
    "Extrapolation",
    "DEFAULT_SCHEDULE",
    "DEFAULT_PLAN",
    "wynn_epsilon",
    "oscillatory_quad",
    "regularized_L",
    "extrapolate_beta",
    "transform_L",
    "reference_cos",
    "reference_sin",
    "log_sin_M",
    "log_cos_integral",
    "LogCosResult",
    "moment_cos_exact",
]

_GL_NODES = 24
_GL_CHECK = 16
_T_HI, _W_HI = np.polynomial.legendre.leggauss(_GL_NODES)
_T_LO, _W_LO = np.polynomial.legendre.leggauss(_GL_CHECK)
_GRADING = 3  # x = a * u**3 on the singular interval
_PANEL_PHASE = 4.0  # radians of the fastest oscillation per Gauss panel


@dataclass(frozen=True)
class RegularizationSchedule:
    """Damping factors ``beta`` for Abel regularisation, strictly decreasing."""

    betas: tuple = (0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625)
    extrapolation_order: int = 5

    def __post_init__(self):
        betas = tuple(float(b) for b in self.betas)
        object.__setattr__(self, "betas", betas)
        if any(b <= 0 for b in betas):
            raise ValueError("all betas must be positive")
        if any(b1 <= b2 for b1, b2 in zip(betas, betas[1:])):
            raise ValueError("betas must be strictly decreasing")
        if not 1 <= self.extrapolation_order < len(betas):
            raise ValueError("need 1 <= extrapolation_order < len(betas)")


@dataclass(frozen=True)
class PartitionPlan:
    """Interval budget and tolerances for :func:`oscillatory_quad`.

    ``breakpoints``, when given, replaces the automatically generated
    half-period grid; it must start at 0, and the last spacing is repeated
    beyond its end.
    """

    breakpoints: tuple | None = None
    max_intervals: int = 400
    tail_accel_terms: int = 20
    rel_tol: float = 1e-10
    abs_tol: float = 1e-15

    def __post_init__(self):
        if self.breakpoints is not None:
            bp = tuple(float(b) for b in self.breakpoints)
            if len(bp) < 2 or bp[0] != 0.0 or any(a >= b for a, b in zip(bp, bp[1:])):
                raise ValueError("breakpoints must increase strictly from 0")
            object.__setattr__(self, "breakpoints", bp)
        if self.max_intervals < 2 or self.tail_accel_terms < 2:
            raise ValueError("max_intervals and tail_accel_terms must be >= 2")


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    abs_error_estimate: float
    intervals_used: int
    accelerated: bool


@dataclass(frozen=True)
class Extrapolation:
    """Limit estimate from :func:`extrapolate_beta`."""

    value: complex
    error_estimate: float
    method: str
    lebesgue_constant: float
    tableau: list = field(default_factory=list, repr=False)


DEFAULT_SCHEDULE = RegularizationSchedule()
DEFAULT_PLAN = PartitionPlan()


# ---------------------------------------------------------------------------
# engine
# ---------------------------------------------------------------------------

def wynn_epsilon(partial_sums: Sequence[complex]) -> complex:
    """Wynn's epsilon-algorithm limit of a sequence of partial sums.

    Returns the deepest even-column entry that can be formed.  A vanishing
    difference ends the table early (the sequence has already converged).
    """
    s = np.asarray(partial_sums, dtype=complex)
    n = len(s)
    if n == 0:
        raise ValueError("empty sequence")
    prev = np.zeros(n + 1, dtype=complex)
    cur = s.copy()
    best = s[-1]
    for col in range(1, n):
        diff = cur[1:] - cur[:-1]
        if np.any(diff == 0):
            break
        nxt = prev[1:len(cur)] + 1.0 / diff
        prev, cur = cur, nxt
        if col % 2 == 0:
            if not np.isfinite(cur[-1]):
                break
            best = cur[-1]
    return complex(best)


def _log_moment(s: complex, a: float) -> complex:
    """``int_0^a log(x) exp(-s x) dx`` from its everywhere-convergent series."""
    la = math.log(a)
    total = 0j
    coef = a  # (-s)^n a^(n+1) / n!
    for n in range(400):
        m = n + 1
        term = coef * (la / m - 1.0 / (m * m))
        total += term
        if abs(term) <= 1e-17 * max(abs(total), 1e-300) and n > 2:
            break
        coef *= -s * a / m
    else:
        raise NoConvergence("log-moment series did not converge")
    return total


def _panel_sums(f, lo, hi, panels, g=None):
    """Integrate ``f`` over each row ``[lo[i], hi[i]]`` using ``panels`` Gauss panels.

    Returns (high-order sums, |high - low| per row, integral of ``g`` per row);
    ``g`` is an optional non-negative bound on the evaluation error of ``f``.
    """
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    edges = lo[:, None] + (hi - lo)[:, None] * np.linspace(0.0, 1.0, panels + 1)[None, :]
    a = edges[:, :-1]
    b = edges[:, 1:]
    mid = 0.5 * (a + b)[..., None]
    half = 0.5 * (b - a)[..., None]
    x_hi = mid + half * _T_HI
    x_lo = mid + half * _T_LO
    n_hi = x_hi.size
    vals = np.asarray(f(np.concatenate([x_hi.ravel(), x_lo.ravel()])), dtype=complex)
    v_hi = vals[:n_hi].reshape(x_hi.shape)
    v_lo = vals[n_hi:].reshape(x_lo.shape)
    s_hi = np.sum(v_hi * _W_HI * half, axis=(1, 2))
    s_lo = np.sum(v_lo * _W_LO * half, axis=(1, 2))
    if g is None:
        s_g = np.zeros(s_hi.shape)
    else:
        s_g = np.sum(np.asarray(g(x_hi), dtype=float) * _W_HI * half, axis=(1, 2))
    return s_hi, np.abs(s_hi - s_lo), s_g


def _first_interval(f, b1, log_model, max_frequency, eval_error=None):
    """Integral over ``[0, b1]``.

    The log model is integrated in closed form on ``[0, a0]`` with
    ``|s| a0 <= 2`` (where its series is well conditioned), the remainder
    there on a graded mesh, and ``[a0, b1]`` on geometrically growing panels.
    """
    closed = 0j
    a0 = b1
    if log_model:
        smax = max(abs(s) for _, s in log_model)
        if smax * b1 > 2.0:
            a0 = 2.0 / smax
        closed = sum(c * _log_moment(s, a0) for c, s in log_model)

        def remainder(x):
            x = np.asarray(x, dtype=float)
            model = np.zeros(x.shape, dtype=complex)
            for c, s in log_model:
                model += c * np.exp(-s * x)
            return f(x) - model * np.log(x)
    else:
        remainder = f

    def graded(u):
        u = np.asarray(u, dtype=float)
        return remainder(a0 * u**_GRADING) * (_GRADING * a0 * u ** (_GRADING - 1))

    graded_error = None
    if eval_error is not None:
        def graded_error(u):
            return eval_error(a0 * u**_GRADING) * (_GRADING * a0 * u ** (_GRADING - 1))

    panels = max(4, math.ceil(a0 * max_frequency / _PANEL_PHASE))
    val, err, ev = _panel_sums(graded, [0.0], [1.0], panels, graded_error)
    total = closed + val[0]
    error = float(err[0])
    evaluation = float(ev[0])
    if a0 < b1:
        edges = [a0]
        while edges[-1] * 2.0 < b1:
            edges.append(edges[-1] * 2.0)
        edges.append(b1)
        widest = max(b - a for a, b in zip(edges, edges[1:]))
        sub = max(1, math.ceil(widest * max_frequency / _PANEL_PHASE))
        vals, errs, ev = _panel_sums(f, edges[:-1], edges[1:], sub, eval_error)
        total += complex(np.sum(vals))
        error += float(np.sum(errs))
        evaluation += float(np.sum(ev))
    return total, error, evaluation


def _tail_ratio(mags):
    """Largest ratio of successive interval magnitudes, or None if not decaying."""
    if len(mags) < 4 or np.any(mags[:-1] == 0):
        return None
    ratios = mags[1:] / mags[:-1]
    r = float(np.max(ratios))
    return r if r < 0.9 else None


def oscillatory_quad(
    f: Callable[[np.ndarray], np.ndarray],
    *,
    first: float,
    spacing: float,
    max_frequency: float,
    plan: PartitionPlan = DEFAULT_PLAN,
    log_model: Sequence[tuple[complex, complex]] = (),
    eval_error: Callable[[np.ndarray], np.ndarray] | None = None,
) -> QuadratureResult:
    """Integrate a decaying or damped oscillatory ``f`` over ``[0, inf)``.

    Parameters
    ----------
    f : callable
        Vectorised integrand, ``f(x) -> complex array``.
    first, spacing : float
        Breakpoints are ``0, first, first + spacing, ...`` (zeros of the
        oscillatory factor), unless ``plan.breakpoints`` is set.
    max_frequency : float
        Fastest angular frequency present in ``f``; sets the Gauss panel
        density.
    log_model : sequence of (c, s)
        If given, ``f(x) - log(x) * sum c exp(-s x)`` must be bounded near
        ``x = 0``; the subtracted model is integrated in closed form.
    eval_error : callable, optional
        Bound on the absolute round-off in ``f(x)``.  Its integral is added
        to the reported error estimate but does not enter the convergence
        test, so an unattainable ``rel_tol`` still fails loudly.

    Returns
    -------
    QuadratureResult
        ``accelerated`` is False when the plain partial sums already met the
        tolerance with a geometric tail bound.
    """
    if plan.breakpoints is not None:
        bp = np.asarray(plan.breakpoints)
        first = float(bp[1])
        extra = bp[1:]
        spacing = float(bp[-1] - bp[-2])
    else:
        extra = np.asarray([first])
    if not (first > 0 and spacing > 0):
        raise ValueError("breakpoint spacing must be positive")

    first_val, first_err, evaluation = _first_interval(f, first, log_model, max_frequency, eval_error)
    terms = [first_val]
    quad_err = first_err
    panels = max(1, math.ceil(spacing * max_frequency / _PANEL_PHASE))
    window = 2 * plan.tail_accel_terms + 1
    block = 16
    start = float(extra[-1])
    pending = list(zip(extra[:-1], extra[1:]))
    estimate = None
    while len(terms) < plan.max_intervals:
        count = min(block, plan.max_intervals - len(terms))
        if pending:
            los = [p[0] for p in pending[:count]]
            his = [p[1] for p in pending[:count]]
            pending = pending[count:]
        else:
            los = start + spacing * np.arange(count)
            his = los + spacing
        start = float(his[-1])
        vals, errs, ev = _panel_sums(f, los, his, panels, eval_error)
        terms.extend(vals.tolist())
        quad_err += float(np.sum(errs))
        evaluation += float(np.sum(ev))
        sums = np.cumsum(terms)
        total = complex(sums[-1])
        mags = np.abs(np.asarray(terms[-8:]))
        tol_abs = max(plan.abs_tol, plan.rel_tol * abs(total))
        ratio = _tail_ratio(mags)
        if ratio is not None:
            tail = float(mags[-1]) * ratio / (1.0 - ratio)
            if tail + quad_err < tol_abs:
                return QuadratureResult(total, tail + quad_err + evaluation, len(terms), False)
        if len(sums) >= 12:
            seq = sums[-window:]
            e0 = wynn_epsilon(seq)
            e1 = wynn_epsilon(seq[:-1])
            e2 = wynn_epsilon(seq[:-2])
            acc_err = max(abs(e0 - e1), abs(e0 - e2))
            tol_abs = max(plan.abs_tol, plan.rel_tol * abs(e0))
            estimate = (e0, acc_err)
            if acc_err + quad_err < tol_abs:
                return QuadratureResult(e0, acc_err + quad_err + evaluation, len(terms), True)
    err = estimate[1] + quad_err if estimate else float("inf")
    raise NoConvergence(
        f"oscillatory quadrature not converged after {len(terms)} intervals "
        f"(error estimate {err:.3g})"
    )


# ---------------------------------------------------------------------------
# damped Hankel cosine transform
# ---------------------------------------------------------------------------

def _canonical_w(w: complex) -> complex:
    # cos is even: integrate with Re w >= 0 so that w and -w give identical results
    if w.real < 0 or (w.real == 0 and w.imag < 0):
        return -w
    return w


def _hankel_roundoff(z, cfg):
    """Round-off bound for ``hankel2_0(z)``.

    Inside the crossover radius the power series has term magnitudes summing
    to ``I0(|z|)`` (times the logarithm for ``Y0``); outside it the expansion
    is accurate to a few ulps of the result.
    """
    r = np.abs(z)
    eps = np.finfo(float).eps
    small = r < cfg.crossover_radius
    safe = np.where(small, np.maximum(r, 1e-300), 1.0)
    series = 2 * eps * np.i0(np.where(small, r, 0.0)) * (2.0 + np.abs(np.log(0.5 * safe)))
    large = 4 * eps * np.sqrt(2.0 / (np.pi * np.maximum(r, 1.0))) * np.exp(np.minimum(np.imag(z), 0.0))
    return np.where(small, series, large)


def _hankel_partition(k: complex, w: complex, beta: float):
    omega = w.real
    if omega >= k.real / 8:
        return math.pi / (2 * omega), math.pi / omega
    # the cosine barely oscillates: follow the Hankel phase instead
    return math.pi / k.real, math.pi / k.real


def regularized_L(
    point: TransformPoint,
    beta: float,
    plan: PartitionPlan = DEFAULT_PLAN,
    cfg: SeriesConfig = DEFAULT_CONFIG,
) -> QuadratureResult:
    """``int_0^inf exp(-beta x) H0^(2)(k x) cos(w x) dx``.

    ``beta = 0`` is allowed inside the strip ``|Im w| < -Im k``, where the
    integral converges absolutely.

    Raises
    ------
    DomainError
        If the damped integrand does not decay.
    NoConvergence
        If the interval budget of ``plan`` is exhausted.
    """
    if point.kind != 2:
        raise DomainError("regularized_L integrates the second-kind Hankel function")
    beta = float(beta)
    if beta < 0:
        raise DomainError("beta must be non-negative")
    k = point.k
    w = _canonical_w(point.w)
    margin = beta - k.imag - abs(w.imag)
    if beta == 0 and not point.in_strip:
        raise DomainError("beta = 0 requires |Im w| < -Im k (absolute convergence)")
    if margin <= 0:
        raise DomainError("damping too weak: integrand grows like exp((|Im w| + Im k - beta) x)")

    def integrand(x):
        return np.exp(-beta * x) * hankel2_0(k * x, cfg) * np.cos(w * x)

    def evaluation_error(x):
        return _hankel_roundoff(k * x, cfg) * np.exp(-beta * x) * np.abs(np.cos(w * x))

    first, spacing = _hankel_partition(k, w, beta)
    # H0(kx) ~ -(2i/pi) log x near 0; times exp(-beta x) cos(w x)
    c = -1j / math.pi
    log_model = ((c, beta - 1j * w), (c, beta + 1j * w))
    return oscillatory_quad(
        integrand,
        first=first,
        spacing=spacing,
        max_frequency=abs(k) + abs(w) + beta,
        plan=plan,
        log_model=log_model,
        eval_error=evaluation_error,
    )


def _neville_table(x, y):
    n = len(x)
    table = [list(y)]
    for m in range(1, n):
        prev = table[-1]
        # row m, entry j interpolates points j..j+m
        table.append([
            (x[j + m] * prev[j] - x[j] * prev[j + 1]) / (x[j + m] - x[j])
            for j in range(n - m)
        ])
    return table


def _rational_table(x, y):
    """Bulirsch-Stoer rational extrapolation tableau evaluated at x = 0."""
    n = len(x)
    table = [list(y)]
    for m in range(1, n):
        prev = table[-1]
        prev2 = table[-2] if m >= 2 else None
        row = []
        for j, i in enumerate(range(m, n)):
            a = prev[j + 1]
            b = prev[j]
            c = prev2[j + 1] if prev2 is not None else 0.0
            d = a - b
            if d == 0 or a == c:
                row.append(a)
                continue
            den = (x[i - m] / x[i]) * (1.0 - d / (a - c)) - 1.0
            row.append(a + d / den if den != 0 else a)
        table.append(row)
    return table


def _lebesgue_at_zero(x):
    total = 0.0
    for i, xi in enumerate(x):
        l = 1.0
        for j, xj in enumerate(x):
            if j != i:
                l *= xj / (xj - xi)
        total += abs(l)
    return total


def extrapolate_beta(
    values: Sequence[tuple[float, complex]],
    order: int = DEFAULT_SCHEDULE.extrapolation_order,
    method: str = "auto",
) -> Extrapolation:
    """Extrapolate samples ``(beta, value)`` to ``beta = 0``.

    ``method='polynomial'`` is Richardson (Neville) extrapolation of degree
    ``order`` on the ``order + 1`` smallest betas; ``'rational'`` is the
    Bulirsch-Stoer diagonal rational analogue.  ``'auto'`` builds both
    tables and keeps the one whose last two orders agree more closely.
    The error estimate is that inter-order difference.

    Raises
    ------
    IllConditioned
        If fewer than ``order + 1`` samples are given, betas repeat or are
        non-positive, or the Lebesgue constant of the extrapolation exceeds
        ``1e12``.
    """
    pts = sorted(((float(b), complex(v)) for b, v in values), key=lambda p: -p[0])
    if order < 1 or len(pts) < order + 1:
        raise IllConditioned(f"need at least {order + 1} samples for order {order}")
    pts = pts[-(order + 1):]
    x = [p[0] for p in pts]
    y = [p[1] for p in pts]
    if any(b <= 0 for b in x) or len(set(x)) != len(x):
        raise IllConditioned("betas must be distinct and positive")
    leb = _lebesgue_at_zero(x)
    if not leb < 1e12:
        raise IllConditioned(f"extrapolation Lebesgue constant {leb:.3g} exceeds 1e12")

    candidates = []
    if method in ("auto", "polynomial"):
        t = _neville_table(x, y)
        candidates.append(("polynomial", t[-1][-1], abs(t[-1][-1] - t[-2][-1]), t))
    if method in ("auto", "rational"):
        t = _rational_table(x, y)
        candidates.append(("rational", t[-1][-1], abs(t[-1][-1] - t[-2][-1]), t))
    if not candidates:
        raise ValueError(f"unknown method {method!r}")
    name, val, err, table = min(candidates, key=lambda c: c[2])
    return Extrapolation(complex(val), float(err), name, leb, table)


def transform_L(
    point: TransformPoint,
    sched: RegularizationSchedule = DEFAULT_SCHEDULE,
    plan: PartitionPlan = DEFAULT_PLAN,
    cfg: SeriesConfig = DEFAULT_CONFIG,
) -> QuadratureResult:
    """Cosine transform ``int_0^inf H0^(2)(k x) cos(w x) dx`` by quadrature.

    Inside the strip ``|Im w| < -Im k`` the integral is evaluated directly.
    Otherwise it is Abel-regularised over ``sched`` and extrapolated to
    ``beta = 0``.
    """
    if point.in_strip:
        return regularized_L(point, 0.0, plan, cfg)
    results = [regularized_L(point, b, plan, cfg) for b in sched.betas]
    samples = [(b, r.value) for b, r in zip(sched.betas, results)]
    ext = extrapolate_beta(samples, sched.extrapolation_order)
    noise = ext.lebesgue_constant * max(r.abs_error_estimate for r in results)
    return QuadratureResult(
        ext.value,
        ext.error_estimate + noise,
        max(r.intervals_used for r in results),
        any(r.accelerated for r in results),
    )


# ---------------------------------------------------------------------------
# elementary damped integrals
# ---------------------------------------------------------------------------

def reference_cos(beta: float) -> float:
    """``int_0^inf exp(-beta x) cos x dx = beta / (1 + beta^2)``."""
    if beta <= 0:
        raise DomainError("beta must be positive")
    return beta / (1.0 + beta * beta)


def reference_sin(beta: float) -> float:
    """``int_0^inf exp(-beta x) sin x dx = 1 / (1 + beta^2)``."""
    if beta <= 0:
        raise DomainError("beta must be positive")
    return 1.0 / (1.0 + beta * beta)


def damped_trig_quad(beta: float, kind: str = "cos", plan: PartitionPlan = DEFAULT_PLAN) -> QuadratureResult:
    """Engine evaluation of ``int exp(-beta x) cos x`` (or ``sin x``) over the half line.

    Serves as a self-test against :func:`reference_cos` / :func:`reference_sin`.
    """
    if beta <= 0:
        raise DomainError("beta must be positive")
    trig = np.cos if kind == "cos" else np.sin
    first = math.pi / 2 if kind == "cos" else math.pi
    return oscillatory_quad(
        lambda x: np.exp(-beta * x) * trig(x),
        first=first,
        spacing=math.pi,
        max_frequency=1.0 + beta,
        plan=plan,
    )


def log_sin_M(beta: float, xi: float, plan: PartitionPlan = DEFAULT_PLAN) -> QuadratureResult:
    """``M(beta, xi) = int_0^inf exp(-beta x) sin(xi x) log(x) dx`` for beta, xi > 0."""
    beta = float(beta)
    xi = float(xi)
    if not (beta > 0 and xi > 0):
        raise DomainError("log_sin_M needs beta > 0 and xi > 0")
    c = 1.0 / 2j
    return oscillatory_quad(
        lambda x: np.exp(-beta * x) * np.sin(xi * x) * np.log(x),
        first=math.pi / xi,
        spacing=math.pi / xi,
        max_frequency=xi + beta,
        plan=plan,
        log_model=((c, beta - 1j * xi), (-c, beta + 1j * xi)),
    )


@dataclass(frozen=True)
class LogCosResult:
    """Two evaluations of ``int exp(-beta x) cos(x) log(x) dx``."""

    direct: QuadratureResult
    decomposed: complex
    decomposed_error: float

    @property
    def value(self) -> complex:
        return self.direct.value

    @property
    def abs_error_estimate(self) -> float:
        return self.direct.abs_error_estimate

    @property
    def gap(self) -> float:
        return abs(self.direct.value - self.decomposed)


def log_cos_integral(beta: float, plan: PartitionPlan = DEFAULT_PLAN) -> LogCosResult:
    """``int_0^inf exp(-beta x) cos(x) log(x) dx``, directly and by parts.

    Integration by parts gives ``beta * M(beta, 1) - int exp(-beta x) sin(x)/x dx``,
    and the last integral equals ``arctan(1/beta)``.
    """
    beta = float(beta)
    if beta <= 0:
        raise DomainError("beta must be positive")
    c = 0.5
    direct = oscillatory_quad(
        lambda x: np.exp(-beta * x) * np.cos(x) * np.log(x),
        first=math.pi / 2,
        spacing=math.pi,
        max_frequency=1.0 + beta,
        plan=plan,
        log_model=((c, beta - 1j), (c, beta + 1j)),
    )
    m = log_sin_M(beta, 1.0, plan)
    decomposed = beta * m.value - math.atan(1.0 / beta)
    return LogCosResult(direct, decomposed, beta * m.abs_error_estimate)


def moment_cos_exact(r: int, beta) -> Fraction:
    """Exact ``int_0^inf exp(-beta x) x^(2r) cos x dx`` for rational ``beta >= 0``.

    At ``beta = 0`` this is the Abel-regularised moment, exactly zero for
    every ``r >= 1``.
    """
    beta = Fraction(beta)
    if beta < 0:
        raise DomainError("beta must be non-negative")
    return damped_cosine_moment(int(r), beta)
