"""
The transform as a solution of an ordinary differential equation.

With ``zeta = k / w`` the cosine transform takes the form
``L(k, w) = F(zeta) / w``, where ``F`` solves

    (zeta - zeta^3) F'' + (1 - 4 zeta^2) F' - 2 zeta F = 0,

whose general solution is

    F = A / sqrt(1 - zeta^2) + B / sqrt(1 - zeta^2) * log(zeta / (1 + sqrt(1 - zeta^2))).

This module checks those statements with finite differences, fits ``A``
and ``B`` from large-``w`` quadrature, and determines the two constants of
the damped log-sine integral ``N(eta) = int exp(-eta x) sin(x) log(x) dx``
from pairs of quadrature samples.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .branch import TransformPoint, continued_sqrt, validate_wavenumber
from .errors import DegeneratePair, DomainError, HankelCosError, IllConditioned, StencilDomainError
from .quad import (
    DEFAULT_PLAN,
    DEFAULT_SCHEDULE,
    PartitionPlan,
    QuadratureResult,
    RegularizationSchedule,
    log_sin_M,
    transform_L,
)
from .specfun import DEFAULT_CONFIG, SeriesConfig

__all__ = [
    "ConstantFitAB",
    "ConstantFitCD",
    "CDConsistencyReport",
    "scaled_argument",
    "sqrt_one_minus_zeta2",
    "F_general",
    "ode5_residual",
    "ode6_residual",
    "fit_AB",
    "fit_ab_values",
    "N_numeric",
    "N_closed",
    "ode16_residual",
    "cd_inverse_matrix",
    "solve_CD",
    "cd_self_consistency",
]

_SINGULAR_ZETA = (0.0, 1.0, -1.0)


@dataclass(frozen=True)
class ConstantFitAB:
    A: complex
    B: complex
    residual_norm: float
    sample_count: int
    condition_number: float = math.nan


@dataclass(frozen=True)
class ConstantFitCD:
    C: float
    D: float
    pair: tuple
    conditioning: float
    abs_error_estimate: float = 0.0


@dataclass
class CDConsistencyReport:
    """Outcome of solving for (C, D) with several sample pairs."""

    fits: list = field(default_factory=list)
    failures: list = field(default_factory=list)   # (pair, message)
    max_dev_C: float = 0.0
    max_dev_D: float = 0.0
    tolerance: float = 1e-6
    warning: str | None = None

    @property
    def passed(self) -> bool:
        return bool(self.fits) and max(self.max_dev_C, self.max_dev_D) < self.tolerance


def scaled_argument(k, w) -> complex:
    """``zeta = k / w``; rejects the singular points 0 and +-1."""
    zeta = complex(k) / complex(w)
    _check_zeta(zeta)
    return zeta


def _check_zeta(zeta: complex):
    for p in _SINGULAR_ZETA:
        if zeta == p:
            raise DomainError(f"zeta = {p:g} is a singular point of the reduced equation")


def sqrt_one_minus_zeta2(zeta: complex) -> complex:
    """``sqrt(1 - zeta^2)`` on the branch tied to :func:`branch.branched_sqrt`.

    Uses ``w sqrt(1 - zeta^2) = i sqrt(k^2 - w^2)`` with ``zeta = k / w``:
    the root is ``i`` times the segment-continued ``sqrt(zeta^2 - t^2)``.
    """
    return 1j * continued_sqrt(complex(zeta), 1.0 + 0j).value


def F_general(zeta, A=1j, B=0.0) -> complex:
    """General solution of the reduced equation at ``zeta``."""
    zeta = complex(zeta)
    _check_zeta(zeta)
    r = sqrt_one_minus_zeta2(zeta)
    value = A / r
    if B != 0:
        value += B / r * cmath.log(zeta / (1.0 + r))
    return value


def _stencil(func, zeta, h):
    if not h > 0:
        raise StencilDomainError("stencil step must be positive")
    pts = [zeta + j * h for j in (-2, -1, 0, 1, 2)]
    for p in _SINGULAR_ZETA:
        # singular point inside the span of the (real-direction) stencil
        if abs(zeta.imag) <= 1e-3 * h and zeta.real - 2 * h <= p <= zeta.real + 2 * h:
            raise StencilDomainError(f"stencil around {zeta} straddles singular point {p:g}")
    vals = [complex(func(p)) for p in pts]
    fm2, fm1, f0, fp1, fp2 = vals
    d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
    return f0, d1, d2


def ode5_residual(F: Callable[[complex], complex], zeta, h: float = 1e-3) -> complex:
    """Residual of ``(z - z^3) F'' + (1 - 4 z^2) F' - 2 z F`` at ``zeta``.

    Derivatives come from five-point central differences, so the residual
    of an exact solution is of order ``h**4`` plus round-off ``eps / h**2``.
    """
    zeta = complex(zeta)
    f0, d1, d2 = _stencil(F, zeta, h)
    return (zeta - zeta**3) * d2 + (1 - 4 * zeta**2) * d1 - 2 * zeta * f0


def ode6_residual(F: Callable[[complex], complex], zeta, h: float = 1e-3) -> complex:
    """Residual of the condensed form ``((z - z^3) F)'' + ((2 z^2 - 1) F)'``."""
    zeta = complex(zeta)
    _, _, g2 = _stencil(lambda z: (z - z**3) * F(z), zeta, h)
    _, p1, _ = _stencil(lambda z: (2 * z**2 - 1) * F(z), zeta, h)
    return g2 + p1


def fit_ab_values(k, w_samples: Sequence[float], values: Sequence[complex]) -> ConstantFitAB:
    """Least-squares fit of ``values ~ A / w + B log(k / (2 w)) / w``.

    Raises
    ------
    IllConditioned
        Fewer than two samples, or near-collinear basis columns
        (condition number above ``1e12`` after column scaling).
    """
    k = complex(k)
    w = np.asarray(w_samples, dtype=float)
    v = np.asarray(values, dtype=complex)
    if w.size < 2 or len(np.unique(w)) < 2:
        raise IllConditioned("need at least two distinct w samples to fit A and B")
    basis = np.column_stack([1.0 / w, np.log(k / (2.0 * w)) / w]).astype(complex)
    norms = np.linalg.norm(basis, axis=0)
    scaled = basis / norms
    cond = float(np.linalg.cond(scaled))
    if not cond < 1e12:
        raise IllConditioned(f"A/B basis condition number {cond:.3g} exceeds 1e12")
    coef, *_ = np.linalg.lstsq(scaled, v, rcond=None)
    coef = coef / norms
    resid = float(np.linalg.norm(basis @ coef - v) / np.linalg.norm(v))
    return ConstantFitAB(complex(coef[0]), complex(coef[1]), resid, int(w.size), cond)


def fit_AB(
    k,
    w_samples: Sequence[float] = (50.0, 100.0, 200.0, 400.0),
    sched: RegularizationSchedule = DEFAULT_SCHEDULE,
    plan: PartitionPlan = DEFAULT_PLAN,
    cfg: SeriesConfig = DEFAULT_CONFIG,
    min_ratio: float = 50.0,
) -> ConstantFitAB:
    """Fit the large-``w`` form ``L ~ A/w + (B/w) log(k/2w)`` to quadrature values.

    The samples must satisfy ``w >= min_ratio * Re k`` so the neglected
    ``O(w**-3)`` terms stay small.
    """
    k = validate_wavenumber(k)
    w_samples = [float(w) for w in w_samples]
    if len(w_samples) < 2:
        raise IllConditioned("need at least two w samples to fit A and B")
    if min(w_samples) < min_ratio * k.real:
        raise DomainError(f"w samples must satisfy w >= {min_ratio:g} Re k")
    values = [transform_L(TransformPoint(k, w), sched, plan, cfg).value for w in w_samples]
    return fit_ab_values(k, w_samples, values)


def N_numeric(eta: float, plan: PartitionPlan = DEFAULT_PLAN) -> QuadratureResult:
    """``N(eta) = int_0^inf exp(-eta x) sin(x) log(x) dx`` by quadrature."""
    return log_sin_M(eta, 1.0, plan)


def N_closed(eta, C: float, D: float):
    """``(C + D eta - log(1 + eta^2)/2 - eta arctan(eta)) / (1 + eta^2)``."""
    eta = np.asarray(eta, dtype=float)
    out = (C + D * eta - 0.5 * np.log1p(eta * eta) - eta * np.arctan(eta)) / (1.0 + eta * eta)
    return float(out) if out.ndim == 0 else out


def ode16_residual(
    C: float,
    D: float,
    eta: float,
    h: float = 1e-3,
    N: Callable[[float], float] | None = None,
) -> float:
    """Residual of ``((1 + eta^2) N)'' = (1 + eta^2)^-1 - 4 (1 + eta^2)^-2``.

    ``N`` defaults to :func:`N_closed` with the given constants; any other
    callable (for instance the quadrature) may be substituted.
    """
    if not eta > 0:
        raise DomainError("eta must be positive")
    if eta - 2 * h <= 0:
        raise StencilDomainError("stencil reaches eta <= 0")
    if N is None:
        def N(e):
            return N_closed(e, C, D)
    g = [(1 + e * e) * float(np.real(N(e))) for e in (eta + j * h for j in (-2, -1, 0, 1, 2))]
    d2 = (-g[0] + 16 * g[1] - 30 * g[2] + 16 * g[3] - g[4]) / (12 * h * h)
    q = 1 + eta * eta
    return d2 - (1 / q - 4 / q**2)


def cd_inverse_matrix(mu: float, nu: float) -> np.ndarray:
    """Explicit inverse of ``[[1, mu], [1, nu]]``."""
    if nu == mu:
        raise DegeneratePair("mu and nu coincide")
    return np.array([[nu, -mu], [-1.0, 1.0]]) / (nu - mu)


def _cd_rhs(eta: float, n_value: float) -> float:
    return (1 + eta * eta) * n_value + 0.5 * math.log1p(eta * eta) + eta * math.atan(eta)


def solve_CD(mu: float, nu: float, plan: PartitionPlan = DEFAULT_PLAN) -> ConstantFitCD:
    """Constants ``C, D`` of ``N_closed`` from quadrature of ``N`` at ``mu`` and ``nu``.

    Raises
    ------
    DegeneratePair
        If ``|nu - mu| < 1e-6 max(mu, nu)``.
    """
    mu = float(mu)
    nu = float(nu)
    if not (mu > 0 and nu > 0):
        raise DomainError("mu and nu must be positive")
    if abs(nu - mu) < 1e-6 * max(mu, nu):
        raise DegeneratePair(f"pair ({mu:g}, {nu:g}) is degenerate")
    n_mu = N_numeric(mu, plan)
    n_nu = N_numeric(nu, plan)
    rhs = np.array([_cd_rhs(mu, n_mu.value.real), _cd_rhs(nu, n_nu.value.real)])
    C, D = cd_inverse_matrix(mu, nu) @ rhs
    conditioning = max(abs(mu), abs(nu), 1.0) / abs(nu - mu)
    err = conditioning * max((1 + mu * mu) * n_mu.abs_error_estimate,
                             (1 + nu * nu) * n_nu.abs_error_estimate)
    return ConstantFitCD(float(C), float(D), (mu, nu), conditioning, err)


def cd_self_consistency(
    pairs: Sequence[tuple[float, float]],
    plan: PartitionPlan = DEFAULT_PLAN,
    tolerance: float = 1e-6,
) -> CDConsistencyReport:
    """Solve for ``(C, D)`` with every pair and report the largest disagreement.

    Pairs that raise are recorded in ``failures`` and do not stop the run.
    """
    report = CDConsistencyReport(tolerance=tolerance)
    for pair in pairs:
        try:
            report.fits.append(solve_CD(pair[0], pair[1], plan))
        except HankelCosError as exc:
            report.failures.append((tuple(pair), str(exc)))
    if len(report.fits) < 2:
        report.warning = "fewer than two usable pairs: consistency is vacuous"
    for a, b in itertools.combinations(report.fits, 2):
        report.max_dev_C = max(report.max_dev_C, abs(a.C - b.C))
        report.max_dev_D = max(report.max_dev_D, abs(a.D - b.D))
    return report
