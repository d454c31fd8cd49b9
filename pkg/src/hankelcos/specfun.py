"""
Zeroth-order cylinder functions for complex arguments.

``J0``, ``Y0`` and the two Hankel functions are evaluated from scratch:
the ascending (logarithmic) power series is used inside
``|z| < crossover_radius`` and Hankel's asymptotic expansion outside it.
Every public function accepts a scalar or an array and returns the same
shape (a Python ``complex`` for scalar input).

The first derivatives ``J0'`` and ``Y0'`` are provided as well; inside the
crossover radius they are the term-by-term derivatives of the same series,
outside it they come from the order-one asymptotic expansion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoConvergence

__all__ = [
    "EULER_GAMMA",
    "SeriesConfig",
    "DEFAULT_CONFIG",
    "bessel_j0",
    "bessel_y0",
    "bessel_j0_prime",
    "bessel_y0_prime",
    "hankel1_0",
    "hankel2_0",
]

EULER_GAMMA = 0.5772156649015329

_TWO_OVER_PI = 2.0 / np.pi
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class SeriesConfig:
    """Evaluation controls for the cylinder functions.

    Parameters
    ----------
    crossover_radius : float
        ``|z|`` at which the power series hands over to the asymptotic
        expansion.
    series_terms_max : int
        Hard cap on the number of power-series terms.
    asymptotic_terms : int
        Number of terms kept in each of the even and odd halves
        (``P`` and ``Q``) of Hankel's expansion; fewer are used when the
        terms start to grow.
    target_rel_tol : float
        Relative size of the last retained series term.
    """

    crossover_radius: float = 12.0
    series_terms_max: int = 60
    asymptotic_terms: int = 10
    target_rel_tol: float = 1e-12

    def __post_init__(self):
        if not self.crossover_radius > 0:
            raise ValueError("crossover_radius must be positive")
        if self.series_terms_max < 1 or self.asymptotic_terms < 1:
            raise ValueError("term counts must be at least 1")
        if not 0 < self.target_rel_tol <= 1e-6:
            raise ValueError("target_rel_tol must lie in (0, 1e-6]")


DEFAULT_CONFIG = SeriesConfig()


def _as_complex(z):
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise DomainError("argument must be finite")
    return arr


def _wrap(arr, scalar):
    return complex(arr) if scalar else arr


def _series(z, cfg):
    """Return J0, J0', and the harmonic sums needed by Y0 and Y0'.

    ``s`` is sum_{m>=1} (-1)^(m+1) H_m q^m / (m!)^2 with q = z^2/4 and H_m
    the harmonic numbers; ``ds`` is its z-derivative.
    """
    q = 0.25 * z * z
    half = np.where(z != 0, 0.5 * z, 1.0)
    term = np.ones_like(z)          # (-q)^m / (m!)^2
    j0 = np.ones_like(z)
    dj0 = np.zeros_like(z)
    s = np.zeros_like(z)
    ds = np.zeros_like(z)
    harmonic = 0.0
    scale = np.ones(z.shape)        # largest term seen: sets the round-off floor
    for m in range(1, cfg.series_terms_max + 1):
        term = term * (-q) / (m * m)
        harmonic += 1.0 / m
        dterm = np.where(z != 0, m * term / half, 0.0)
        j0 = j0 + term
        dj0 = dj0 + dterm
        s = s - harmonic * term
        ds = ds - harmonic * dterm
        tail = np.abs(term) * harmonic
        scale = np.maximum(scale, tail)
        if np.all(tail <= 0.1 * _EPS * scale):
            break
    else:
        if np.any(tail > cfg.target_rel_tol * scale):
            raise NoConvergence(
                f"J0/Y0 power series not converged after {cfg.series_terms_max} terms"
            )
    return j0, dj0, s, ds


def _asymptotic_sums(z, nu, cfg):
    """Hankel's sums  sum_k i^k a_k(nu) / z^k  split into P (even k) and Q (odd k).

    Returns ``(P, Q)`` with the convention
    H1 ~ sqrt(2/(pi z)) e^{i chi} (P + i Q),  H2 ~ sqrt(2/(pi z)) e^{-i chi} (P - i Q).
    """
    mu = 4.0 * nu * nu
    inv8z = 1.0 / (8.0 * z)
    p = np.ones_like(z)
    qsum = np.zeros_like(z)
    term = np.ones_like(z)          # a_k / z^k, unsigned
    prev = np.full(z.shape, np.inf)
    active = np.ones(z.shape, dtype=bool)
    for k in range(1, 2 * cfg.asymptotic_terms):
        term = term * (mu - (2 * k - 1) ** 2) * inv8z / k
        mag = np.abs(term)
        # optimal truncation: stop adding once terms begin to grow
        active &= mag < prev
        prev = mag
        if not np.any(active):
            break
        contrib = np.where(active, term, 0.0)
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2 == 0:
            p = p + sign * contrib
        else:
            qsum = qsum + sign * contrib
    return p, qsum


def _asymptotic(z, nu, cfg):
    """(H1_nu, H2_nu) from the large-argument expansion."""
    p, q = _asymptotic_sums(z, nu, cfg)
    chi = z - (0.5 * nu + 0.25) * np.pi
    amp = np.sqrt(_TWO_OVER_PI / z)
    h1 = amp * np.exp(1j * chi) * (p + 1j * q)
    h2 = amp * np.exp(-1j * chi) * (p - 1j * q)
    return h1, h2


def _large_argument(z, cfg, want):
    """Asymptotic branch.  Arguments with Re z < 0 are reflected to -z first,
    since the expansion of H1 degrades near arg z = -pi (a Stokes line)."""
    flip = z.real < 0
    zr = np.where(flip, -z, z)
    # log z - log(-z) = -i*pi for Im z <= 0 after reflection
    if want in ("dj0", "dy0"):
        h1, h2 = _asymptotic(zr, 1, cfg)
        dj = -0.5 * (h1 + h2)
        if want == "dj0":
            return np.where(flip, -dj, dj)
        dy = -(h1 - h2) / 2j
        return np.where(flip, -dy + 2j * dj, dy)
    h1, h2 = _asymptotic(zr, 0, cfg)
    j = 0.5 * (h1 + h2)
    if want == "j0":
        return j
    y = np.where(flip, (h1 - h2) / 2j - 2j * j, (h1 - h2) / 2j)
    if want == "y0":
        return y
    # H2(z) = -H1(-z) across the reflection, free of cancellation
    return np.where(flip, -h1, h2)


def _split(z, cfg):
    return np.abs(z) < cfg.crossover_radius


def _evaluate(z, cfg, want, *, use_series=None):
    """Shared driver.  ``want`` picks 'j0', 'y0', 'dj0', 'dy0' or 'h2'.

    ``use_series`` forces one branch (True/False) for crossover diagnostics.
    """
    out = np.empty(z.shape, dtype=complex)
    small = _split(z, cfg) if use_series is None else np.full(z.shape, bool(use_series))
    if np.any(small):
        zs = z[small]
        j0, dj0, s, ds = _series(zs, cfg)
        if want in ("y0", "dy0", "h2"):
            if np.any(zs == 0):
                raise DomainError("Y0 and H0 are logarithmically singular at z = 0")
            logterm = np.log(0.5 * zs) + EULER_GAMMA
        if want == "j0":
            out[small] = j0
        elif want == "dj0":
            out[small] = dj0
        elif want == "y0":
            out[small] = _TWO_OVER_PI * (logterm * j0 + s)
        elif want == "dy0":
            out[small] = _TWO_OVER_PI * (j0 / zs + logterm * dj0 + ds)
        else:
            out[small] = j0 - 1j * _TWO_OVER_PI * (logterm * j0 + s)
    large = ~small
    if np.any(large):
        out[large] = _large_argument(z[large], cfg, want)
    return out


def bessel_j0(z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """Bessel function of the first kind, order zero.

    Examples
    --------
    >>> round(bessel_j0(1.0).real, 10)
    0.7651976866
    """
    scalar = np.ndim(z) == 0
    return _wrap(_evaluate(np.atleast_1d(_as_complex(z)), cfg, "j0").reshape(np.shape(z)), scalar)


def bessel_y0(z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """Bessel function of the second kind, order zero (principal logarithm).

    Raises
    ------
    DomainError
        At ``z = 0``.
    """
    scalar = np.ndim(z) == 0
    return _wrap(_evaluate(np.atleast_1d(_as_complex(z)), cfg, "y0").reshape(np.shape(z)), scalar)


def bessel_j0_prime(z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """First derivative of :func:`bessel_j0` (equals ``-J1``)."""
    scalar = np.ndim(z) == 0
    return _wrap(_evaluate(np.atleast_1d(_as_complex(z)), cfg, "dj0").reshape(np.shape(z)), scalar)


def bessel_y0_prime(z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """First derivative of :func:`bessel_y0` (equals ``-Y1``)."""
    scalar = np.ndim(z) == 0
    return _wrap(_evaluate(np.atleast_1d(_as_complex(z)), cfg, "dy0").reshape(np.shape(z)), scalar)


def hankel2_0(z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """Hankel function of the second kind, ``H0^(2)(z) = J0(z) - i Y0(z)``.

    Intended for ``Im z <= 0``, where it decays like ``exp(-i z)/sqrt(z)``.
    Near the origin it behaves as ``1 - (2i/pi)(log(z/2) + gamma)``.

    Raises
    ------
    DomainError
        At ``z = 0``.
    """
    scalar = np.ndim(z) == 0
    return _wrap(_evaluate(np.atleast_1d(_as_complex(z)), cfg, "h2").reshape(np.shape(z)), scalar)


def hankel1_0(z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """Hankel function of the first kind, defined as ``conj(H0^(2)(conj z))``."""
    return np.conj(hankel2_0(np.conj(z), cfg)) if np.ndim(z) else hankel2_0(
        complex(z).conjugate(), cfg
    ).conjugate()


def series_and_asymptotic(z, cfg: SeriesConfig = DEFAULT_CONFIG, which: str = "h2"):
    """Evaluate ``which`` by both methods regardless of ``|z|``.

    Used to check that the two representations join smoothly at the
    crossover radius.  Returns ``(series_value, asymptotic_value)``.
    """
    arr = np.atleast_1d(_as_complex(z))
    a = _evaluate(arr, cfg, which, use_series=True).reshape(np.shape(z))
    b = _evaluate(arr, cfg, which, use_series=False).reshape(np.shape(z))
    if np.ndim(z) == 0:
        return complex(a), complex(b)
    return a, b
