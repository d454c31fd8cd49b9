"""
A differential equation for the transform
=========================================

Written as a function of ``zeta = k / w``, ``w L`` solves a second-order
equation whose general solution carries two constants ``A`` and ``B``.
Large-``w`` data fixes them; a companion log-sine integral fixes the two
constants ``C`` and ``D`` of a second equation.
"""

import math

from hankelcos import EULER_GAMMA, F_general, N_closed, N_numeric, cd_self_consistency, fit_AB
from hankelcos.route_ode import ode5_residual

# Both basis solutions satisfy the equation to finite-difference accuracy
for a, b in ((1, 0), (0, 1)):
    worst = max(abs(ode5_residual(lambda z: F_general(z, a, b), zeta)) for zeta in (0.3, 0.5, 0.5 + 0.2j))
    print(f"A = {a}, B = {b}: max residual {worst:.1e}")

# Fit the constants from quadrature at w = 50..400
fit = fit_AB(1 - 0.1j)
print(f"A = {fit.A:.5f}   B = {fit.B:.5f}   (cond {fit.condition_number:.1e})")

# Pairs of damping values each give their own C and D; they should agree
rep = cd_self_consistency([(0.5, 2.0), (1.0, 3.0), (0.25, 1.5)])
for f in rep.fits:
    print(f"pair {f.pair}:  C = {f.C:+.12f}  D = {f.D:.12f}")
print(f"-gamma = {-EULER_GAMMA:+.12f}  pi/2 = {math.pi / 2:.12f}")

# With those constants the closed expression reproduces the integral
for eta in (0.5, 1.0, 2.0):
    print(f"eta = {eta}:  quadrature {N_numeric(eta).value:+.12f}   "
          f"closed {N_closed(eta, -EULER_GAMMA, math.pi / 2):+.12f}")
