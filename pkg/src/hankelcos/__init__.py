"""
hankelcos: the Fourier cosine transform of the Hankel function ``H0^(2)(k x)``.

The transform ``L(k, w) = int_0^inf H0^(2)(k x) cos(w x) dx`` equals
``1 / sqrt(k^2 - w^2)`` on a fixed branch of the root.  The package
computes it three independent ways and checks them against each other:

- ``branch``: the branched root and the closed form;
- ``quad``: Abel-regularised oscillatory quadrature with extrapolation
  of the damping parameter to zero;
- ``route_ode``: a differential equation in ``k / w`` and the constants
  that pin its solution down;
- ``route_green``: the two-dimensional Helmholtz Green's function and its
  spectral representation.

``specfun`` supplies ``J0``, ``Y0`` and the Hankel functions for complex
arguments; ``cli`` is the command-line front end.
"""

from .branch import (
    BranchedRoot,
    TransformPoint,
    branched_sqrt,
    closed_form_L,
    greens_spectral,
    validate_wavenumber,
)
from .errors import (
    BranchPointProximity,
    DegeneratePair,
    DomainError,
    GridTooCoarse,
    HankelCosError,
    IllConditioned,
    NoConvergence,
    NonConvergence,
    StencilDomainError,
    TailNotConverged,
)
from .quad import (
    DEFAULT_PLAN,
    DEFAULT_SCHEDULE,
    PartitionPlan,
    QuadratureResult,
    RegularizationSchedule,
    extrapolate_beta,
    log_cos_integral,
    log_sin_M,
    moment_cos_exact,
    regularized_L,
    transform_L,
)
from .route_green import GridSpec, greens_direct, helmholtz_residual, inverse_transform_G, transform_identity
from .route_ode import F_general, N_closed, N_numeric, cd_self_consistency, fit_AB, solve_CD
from .specfun import (
    EULER_GAMMA,
    SeriesConfig,
    bessel_j0,
    bessel_j0_prime,
    bessel_y0,
    bessel_y0_prime,
    hankel1_0,
    hankel2_0,
)

__version__ = "0.1.0"
