"""
The transform through the two-dimensional Helmholtz Green's function.

``G(x, y) = (i/4) H0^(2)(k rho)`` solves ``(Laplacian + k^2) G = -delta``.
Its Fourier transform in ``x`` is ``(i / (2 r)) exp(-i r |y|)`` with
``r = sqrt(k^2 - w^2)``, and at ``y = 0`` the cosine transform of
``H0^(2)(k |x|)`` follows from that spectral function because the
integrand is even.  This module evaluates both sides, checks the
Helmholtz equation on a grid and inverts the spectral representation
numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .branch import TransformPoint, closed_form_L, greens_spectral, validate_wavenumber
from .errors import DomainError, GridTooCoarse, TailNotConverged
from .specfun import DEFAULT_CONFIG, SeriesConfig, hankel2_0

__all__ = [
    "GreensSample",
    "GridSpec",
    "HelmholtzReport",
    "SpectralInversion",
    "IdentityCheck",
    "greens_direct",
    "helmholtz_residual",
    "inverse_transform_G",
    "transform_identity",
]

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)
_GL_LOW_NODES, _GL_LOW_WEIGHTS = np.polynomial.legendre.leggauss(8)


@dataclass(frozen=True)
class GreensSample:
    """One evaluation of the Green's function."""

    x: float
    y: float
    k: complex
    value: complex


@dataclass(frozen=True)
class GridSpec:
    """Rectangular grid ``[x_min, x_max] x [y_min, y_max]`` with ``nx * ny`` nodes.

    The grid may not come within two grid spacings of the source at the
    origin.
    """

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int

    def __post_init__(self):
        if self.nx < 5 or self.ny < 5:
            raise DomainError("grid needs at least 5 nodes per direction")
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            raise DomainError("grid extents must be increasing")
        h = max(self.hx, self.hy)
        dx = max(self.x_min, -self.x_max, 0.0)
        dy = max(self.y_min, -self.y_max, 0.0)
        if math.hypot(dx, dy) < 2 * h:
            raise DomainError("grid must stay at least two spacings away from the origin")

    @property
    def hx(self) -> float:
        return (self.x_max - self.x_min) / (self.nx - 1)

    @property
    def hy(self) -> float:
        return (self.y_max - self.y_min) / (self.ny - 1)

    def refined(self) -> GridSpec:
        """Same extents, half the spacing."""
        return GridSpec(self.x_min, self.x_max, self.y_min, self.y_max,
                        2 * self.nx - 1, 2 * self.ny - 1)

    @classmethod
    def square(cls, lo: float, hi: float, h: float) -> GridSpec:
        n = int(round((hi - lo) / h)) + 1
        return cls(lo, hi, lo, hi, n, n)


@dataclass(frozen=True)
class HelmholtzReport:
    max_residual: float
    hx: float
    hy: float
    refined_max_residual: float | None = None
    refinement_ratio: float | None = None


@dataclass(frozen=True)
class SpectralInversion:
    """Numerical inverse Fourier transform of the spectral Green's function."""

    value: complex
    tail_bound: float
    abs_error_estimate: float
    panels: int
    detoured: bool


class IdentityCheck(NamedTuple):
    lhs: complex
    rhs: complex
    gap: float


def greens_direct(x, y, k, cfg: SeriesConfig = DEFAULT_CONFIG):
    """``(i/4) H0^(2)(k sqrt(x^2 + y^2))``; vectorised over ``x`` and ``y``.

    Raises
    ------
    DomainError
        At the source point ``x = y = 0``.
    """
    k = validate_wavenumber(k)
    scalar = np.ndim(x) == 0 and np.ndim(y) == 0
    rho = np.hypot(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    if np.any(rho == 0):
        raise DomainError("the Green's function is singular at the origin")
    val = 0.25j * np.asarray(hankel2_0(k * rho, cfg))
    return complex(val) if scalar else val


def _residual_max(field, k, grid: GridSpec) -> float:
    xs = np.linspace(grid.x_min, grid.x_max, grid.nx)
    ys = np.linspace(grid.y_min, grid.y_max, grid.ny)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    G = field(X, Y)
    lap = ((G[2:, 1:-1] - 2 * G[1:-1, 1:-1] + G[:-2, 1:-1]) / grid.hx**2
           + (G[1:-1, 2:] - 2 * G[1:-1, 1:-1] + G[1:-1, :-2]) / grid.hy**2)
    res = lap + k * k * G[1:-1, 1:-1]
    return float(np.max(np.abs(res)))


def helmholtz_residual(
    k,
    grid: GridSpec,
    cfg: SeriesConfig = DEFAULT_CONFIG,
    *,
    field: Callable | None = None,
    refine: bool = True,
    min_ratio: float = 3.0,
) -> HelmholtzReport:
    """Maximum of ``|(Laplacian + k^2) G|`` over the grid interior.

    The Laplacian is the five-point stencil, so the residual of the exact
    field falls by four when the spacing is halved.  With ``refine`` the
    grid is halved once and the ratio of the two maxima is reported.

    Parameters
    ----------
    field : callable, optional
        ``field(X, Y)`` replacing :func:`greens_direct`; useful for
        confirming that a wrong field is rejected.

    Raises
    ------
    GridTooCoarse
        If the refinement ratio is below ``min_ratio``.
    """
    k = validate_wavenumber(k)
    if field is None:
        def field(X, Y):
            return greens_direct(X, Y, k, cfg)
    coarse = _residual_max(field, k, grid)
    if not refine:
        return HelmholtzReport(coarse, grid.hx, grid.hy)
    fine = _residual_max(field, k, grid.refined())
    ratio = coarse / fine if fine > 0 else math.inf
    if ratio < min_ratio:
        raise GridTooCoarse(
            f"residual fell by only {ratio:.3g} on refinement (expected about 4)"
        )
    return HelmholtzReport(coarse, grid.hx, grid.hy, fine, ratio)


def _spectral_integrand(k, x, y):
    absy = abs(y)

    def f(w):
        r = np.sqrt(k * k - w * w + 0j)
        # branch with Im r <= 0 on the real axis, matching branched_sqrt there
        r = np.where(r.imag > 0, -r, r)
        return np.exp(-1j * w * x) * 1j / (2 * r) * np.exp(-1j * r * absy)

    return f


def _gl_panel(f, a, b):
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    hi = half * np.dot(_GL_WEIGHTS, f(mid + half * _GL_NODES))
    lo = half * np.dot(_GL_LOW_WEIGHTS, f(mid + half * _GL_LOW_NODES))
    return hi, abs(hi - lo)


def _gl_arc(f, centre, radius, theta0, theta1):
    def g(theta):
        e = np.exp(1j * theta)
        return f(centre + radius * e) * 1j * radius * e
    return _gl_panel(g, theta0, theta1)


def inverse_transform_G(
    k,
    x: float,
    y: float,
    w_max: float | None = None,
    n: int = 256,
    tol: float = 1e-5,
    detour: bool | None = None,
) -> SpectralInversion:
    """``(1/2pi) int exp(-i w x) Gtilde(w, y) dw`` over ``[-w_max, w_max]``.

    Composite Gauss-Legendre with ``n`` panels and extra breakpoints at
    ``w = +-Re k``.  When ``|Im k|`` is small the real axis is left on
    semicircles of radius ``0.1 |Im k|`` around ``+-Re k``: above the
    point ``+Re k`` and below ``-Re k``, keeping both branch points on the
    same side of the contour as the real axis does.

    The truncated tails are bounded from the local exponential decay rate
    at ``+-w_max``.  For ``y = 0`` the integrand decays only like ``1/w``
    and the bound fails.

    Raises
    ------
    DomainError
        If ``Im k >= 0`` (no decay on the real axis) or ``n < 64``.
    TailNotConverged
        If the tail bound exceeds ``tol``.
    """
    k = validate_wavenumber(k)
    if not k.imag < 0:
        raise DomainError("Im k must be negative for the real-axis inversion")
    if n < 64:
        raise DomainError("n must be at least 64")
    if w_max is None:
        w_max = 30.0 * abs(k)
    if not w_max > 2 * k.real:
        raise DomainError("w_max must exceed 2 Re k")
    x = float(x)
    y = float(y)
    f = _spectral_integrand(k, x, y)

    # tail bound from the decay rate of |integrand| at both ends
    tail = 0.0
    dw = 1e-3 * w_max
    for edge, outward in ((w_max, 1.0), (-w_max, -1.0)):
        m0 = abs(complex(f(np.array([edge]))[0]))
        m1 = abs(complex(f(np.array([edge + outward * dw]))[0]))
        if m0 == 0.0:
            continue
        rate = (math.log(m0) - math.log(m1)) / dw if m1 > 0 else math.inf
        tail += m0 / rate if rate > 0 else math.inf
    tail /= 2 * math.pi
    if not tail <= tol:
        raise TailNotConverged(f"truncated spectral tail bound {tail:.3g} exceeds {tol:.3g}")

    if detour is None:
        detour = abs(k.imag) < 0.05 * abs(k)
    radius = 0.1 * abs(k.imag)
    kr = k.real
    edges = np.linspace(-w_max, w_max, n + 1)
    special = [-kr - radius, -kr + radius, kr - radius, kr + radius] if detour else [-kr, kr]
    edges = np.unique(np.concatenate([edges, special]))

    total = 0j
    err = 0.0
    panels = 0
    for a, b in zip(edges[:-1], edges[1:]):
        if detour and (a >= kr - radius and b <= kr + radius
                       or a >= -kr - radius and b <= -kr + radius):
            continue
        v, e = _gl_panel(f, a, b)
        total += v
        err += e
        panels += 1
    if detour:
        v, e = _gl_arc(f, kr, radius, math.pi, 0.0)        # over +Re k
        total += v
        err += e
        v, e = _gl_arc(f, -kr, radius, -math.pi, 0.0)      # under -Re k
        total += v
        err += e
        panels += 2
    scale = 1.0 / (2 * math.pi)
    return SpectralInversion(total * scale, tail, err * scale, panels, bool(detour))


def transform_identity(point: TransformPoint) -> IdentityCheck:
    """Compare ``2 Gtilde(w, 0)`` with the closed-form transform at one point.

    ``Gtilde(w, 0) = i / (2 r)``, so ``-i * 2 Gtilde`` must equal ``1 / r``.
    """
    lhs = -2j * greens_spectral(point, 0.0)
    rhs = closed_form_L(point)
    return IdentityCheck(lhs, rhs, abs(lhs - rhs))
