"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HankelCosError(Exception):
    """Base class for all errors raised by :mod:`hankelcos`."""


class DomainError(HankelCosError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class NoConvergence(HankelCosError, ArithmeticError):
    """A series or quadrature failed to reach its tolerance within budget."""


# Both spellings are used in the literature on series evaluation.
NonConvergence = NoConvergence


class BranchPointProximity(HankelCosError, ArithmeticError):
    """A continuation path passes too close to one of the branch points ``w = +-k``."""


class IllConditioned(HankelCosError, ArithmeticError):
    """A linear fit or extrapolation system is numerically singular."""


class DegeneratePair(IllConditioned):
    """The two abscissae of a 2x2 constant-fixing system coincide."""


class StencilDomainError(DomainError):
    """A finite-difference stencil point falls on a singular point."""


class GridTooCoarse(HankelCosError):
    """Grid refinement did not shrink a discretisation residual as expected."""


class TailNotConverged(NoConvergence):
    """A truncated spectral integral leaves a tail larger than requested."""
