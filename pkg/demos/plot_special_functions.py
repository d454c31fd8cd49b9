"""
Cylinder functions of complex argument
======================================

``J0`` and ``Y0`` come from their power series inside ``|z| = 12`` and from
the Hankel asymptotic expansion outside.  The two representations agree
across the hand-off.
"""

import numpy as np

from hankelcos import bessel_j0, bessel_j0_prime, bessel_y0, bessel_y0_prime, hankel2_0
from hankelcos.specfun import series_and_asymptotic

z = np.array([1.0, 2.404825557695773, 3 - 2j, 15 - 4j])
print("J0:", np.round(bessel_j0(z), 10))
print("H2:", np.round(hankel2_0(z), 10))

# Across the crossover radius the series and asymptotic values match
zc = 12.0 * np.exp(-1j * np.linspace(0, np.pi, 7))
for which in ("j0", "y0"):
    a, b = series_and_asymptotic(zc, which=which)
    print(f"{which}: max rel mismatch {np.max(np.abs(a - b) / np.abs(a)):.1e}")

# The Wronskian 2/(pi z) holds to round-off near the real axis, but the
# products J0 Y0' grow like exp(2|Im z|) so cancellation wins further down
for im in (0.0, -3.0, -8.0, -15.0):
    zz = 10 + 1j * im
    wr = bessel_j0(zz) * bessel_y0_prime(zz) - bessel_j0_prime(zz) * bessel_y0(zz)
    print(f"Im z = {im:6.1f}:  rel defect {abs(wr * np.pi * zz / 2 - 1):.1e}")
