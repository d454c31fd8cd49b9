"""
The branched square root ``sqrt(k^2 - w^2)`` and the closed forms built on it.

Branch convention
-----------------
The root is continued along the straight segment ``w' = t w``,
``0 <= t <= 1``, starting from the value ``k`` at ``w' = 0``.  Along that
path ``s(t) = k^2 - t^2 w^2`` is a quadratic in ``t``, so its imaginary
part is monotone in ``t^2`` and the path meets the negative real axis (the
cut of the principal root) at most once.  The continued root is therefore
the principal root of ``s(1)``, multiplied by the sign fixed at ``t = 0``
and flipped once per crossing.

For real ``k`` and real ``w`` the segment runs straight through the branch
point when ``|w| > k``.  The value there is the limit of a slightly lossy
wavenumber (``k - i0`` for the second-kind convention, ``k + i0`` for the
first-kind one).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import BranchPointProximity, DomainError

__all__ = [
    "TransformPoint",
    "BranchedRoot",
    "validate_wavenumber",
    "branched_sqrt",
    "continued_sqrt",
    "closed_form_L",
    "greens_spectral",
    "DEFAULT_CUTOFF",
]

DEFAULT_CUTOFF = 1e-9


def validate_wavenumber(k, kind: int = 2) -> complex:
    """Return ``k`` as a complex number after checking the sign conventions.

    ``kind=2`` (Hankel function of the second kind) needs ``Re k > 0`` and
    ``Im k <= 0``; ``kind=1`` is the complex-conjugate convention.
    """
    k = complex(k)
    if not (math.isfinite(k.real) and math.isfinite(k.imag)):
        raise DomainError("k must be finite")
    if not k.real > 0:
        raise DomainError("Re k must be positive")
    if kind == 2 and k.imag > 0:
        raise DomainError("Im k must be <= 0 for the second-kind convention")
    if kind == 1 and k.imag < 0:
        raise DomainError("Im k must be >= 0 for the first-kind convention")
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    return k


@dataclass(frozen=True)
class TransformPoint:
    """A wavenumber ``k`` and a transform variable ``w``.

    ``kind`` selects the time convention (2: ``Im k <= 0``, 1: ``Im k >= 0``).
    """

    k: complex
    w: complex
    kind: int = 2

    def __post_init__(self):
        object.__setattr__(self, "k", validate_wavenumber(self.k, self.kind))
        w = complex(self.w)
        if not (math.isfinite(w.real) and math.isfinite(w.imag)):
            raise DomainError("w must be finite")
        object.__setattr__(self, "w", w)
        if w == self.k or w == -self.k:
            raise DomainError("w = +-k is a branch point")

    @property
    def in_strip(self) -> bool:
        """True inside ``|Im w| < |Im k|``, where the cosine transform converges absolutely."""
        return abs(self.w.imag) < abs(self.k.imag)


@dataclass(frozen=True)
class BranchedRoot:
    value: complex
    path_windings: int


def _segment_distance(w: complex, p: complex) -> float:
    """Distance from the point ``p`` to the segment ``[0, w]``."""
    ww = abs(w) ** 2
    if ww == 0.0:
        return abs(p)
    t = (p * w.conjugate()).real / ww
    t = min(max(t, 0.0), 1.0)
    return abs(t * w - p)


def continued_sqrt(k: complex, w: complex, *, limit_sign: float = -1.0) -> BranchedRoot:
    """Continue ``sqrt(k^2 - t^2 w^2)`` from ``k`` at ``t = 0`` to ``t = 1``.

    No validation is performed; ``k`` may lie anywhere off the origin.
    ``limit_sign`` is the sign of the infinitesimal imaginary part given to
    ``k^2 - w^2`` when the whole path lies on the real axis.
    """
    k2 = k * k
    w2 = w * w
    s1 = k2 - w2
    root0 = cmath.sqrt(k2)
    sign = 1.0 if abs(root0 - k) <= abs(root0 + k) else -1.0

    if k2.imag == 0.0 and w2.imag == 0.0:
        # path along the real s-axis; take the side fixed by limit_sign
        if s1.real < 0.0:
            root = cmath.sqrt(complex(s1.real, math.copysign(0.0, limit_sign)))
        else:
            root = cmath.sqrt(complex(s1.real, 0.0))
        if k2.real < 0.0:
            # start point itself on the cut: approach from the same side
            root0 = cmath.sqrt(complex(k2.real, math.copysign(0.0, limit_sign)))
            sign = 1.0 if abs(root0 - k) <= abs(root0 + k) else -1.0
        return BranchedRoot(sign * root, 0)

    crossings = 0
    if w2.imag != 0.0:
        t2 = k2.imag / w2.imag
        if 0.0 < t2 < 1.0 and (k2 - t2 * w2).real < 0.0:
            crossings = 1
    root = cmath.sqrt(s1)
    if s1.imag == 0.0 and s1.real < 0.0:
        # endpoint on the cut: take the limit from inside the path (t -> 1-)
        side = w2.imag if w2.imag != 0.0 else limit_sign
        root = cmath.sqrt(complex(s1.real, math.copysign(0.0, side)))
    if k2.imag == 0.0 and k2.real < 0.0:
        # start on the cut: fix the initial sign from the direction the path leaves it
        root0 = cmath.sqrt(complex(k2.real, math.copysign(0.0, -w2.imag)))
        sign = 1.0 if abs(root0 - k) <= abs(root0 + k) else -1.0
    if crossings:
        sign = -sign
    return BranchedRoot(sign * root, crossings)


def branched_sqrt(point: TransformPoint, cutoff: float = DEFAULT_CUTOFF) -> BranchedRoot:
    """``sqrt(k^2 - w^2)`` on the straight-segment branch, equal to ``k`` at ``w = 0``.

    Parameters
    ----------
    point : TransformPoint
    cutoff : float
        Minimum allowed distance, relative to ``|k|``, between the
        continuation path and the branch points ``+-k``.

    Raises
    ------
    BranchPointProximity
        If the path comes closer than ``cutoff * |k|`` to ``+-k``.  For real
        ``k`` and real ``w`` only the endpoint is checked, since the path is
        understood to pass infinitesimally beside the branch point.

    Examples
    --------
    >>> branched_sqrt(TransformPoint(1.0, 2.0)).value
    -1.7320508075688772j
    """
    k, w = point.k, point.w
    on_axis = k.imag == 0.0 and w.imag == 0.0
    if on_axis:
        dist = min(abs(w - k), abs(w + k))
    else:
        dist = min(_segment_distance(w, k), _segment_distance(w, -k))
    if dist < cutoff * abs(k):
        raise BranchPointProximity(
            f"continuation path passes within {dist:.3g} of a branch point w = +-k"
        )
    limit_sign = -1.0 if point.kind == 2 else 1.0
    return continued_sqrt(k, w, limit_sign=limit_sign)


def closed_form_L(point: TransformPoint, cutoff: float = DEFAULT_CUTOFF) -> complex:
    """Closed-form cosine transform of ``H0^(2)(k x)``: ``1 / sqrt(k^2 - w^2)``."""
    return 1.0 / branched_sqrt(point, cutoff).value


def greens_spectral(point: TransformPoint, y: float, cutoff: float = DEFAULT_CUTOFF) -> complex:
    """Spectral Green's function ``i/(2 r) exp(-i r |y|)`` with ``r = sqrt(k^2 - w^2)``.

    The branch is that of :func:`branched_sqrt`, so for real ``w`` and
    ``Im k < 0`` the exponential is bounded in ``|y|``.
    """
    r = branched_sqrt(point, cutoff).value
    return 1j / (2.0 * r) * cmath.exp(-1j * r * abs(float(y)))
