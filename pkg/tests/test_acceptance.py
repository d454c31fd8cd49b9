"""
Acceptance criteria, each run at its stated tolerance.

Every test prints one ``criterion N: PASS|FAIL`` line; the lines are
repeated together at the end of the pytest run.  Run this file alone with

    pytest tests/test_acceptance.py -v
"""

import math
import sys
import time

import numpy as np
import pytest

from hankelcos.branch import TransformPoint, closed_form_L
from hankelcos.errors import BranchPointProximity, DomainError
from hankelcos.quad import DEFAULT_SCHEDULE, extrapolate_beta, moment_cos_exact, transform_L
from hankelcos.route_green import GridSpec, greens_direct, helmholtz_residual, inverse_transform_G, transform_identity
from hankelcos.route_ode import F_general, N_closed, N_numeric, cd_self_consistency, fit_AB, ode5_residual, ode16_residual
from hankelcos.specfun import (
    DEFAULT_CONFIG,
    EULER_GAMMA,
    bessel_j0,
    bessel_j0_prime,
    bessel_y0,
    bessel_y0_prime,
    series_and_asymptotic,
)

SEED = 20240601


def test_criterion_01_transform_grid(acceptance):
    start = time.perf_counter()
    worst = 0.0
    count = 0
    for k in (1 - 0.1j, 2 - 0.5j, 0.8 - 0.05j):
        for w in np.linspace(0.0, 3 * abs(k), 26):
            if min(abs(w - k), abs(w + k)) < 0.1 * abs(k):
                continue
            p = TransformPoint(k, w)
            ref = closed_form_L(p)
            worst = max(worst, abs(transform_L(p).value - ref) / abs(ref))
            count += 1
    elapsed = time.perf_counter() - start
    ok = worst < 1e-6 and elapsed < 300
    acceptance(1, "transform_L vs closed form on the k/w grid", ok,
               f"{count} points, max rel gap {worst:.2e} < 1e-6, {elapsed:.1f} s < 300 s")
    assert ok


def test_criterion_02_fit_ab(acceptance):
    fit = fit_AB(1 - 0.1j, (50, 100, 200, 400))
    da, db = abs(fit.A - 1j), abs(fit.B)
    ok = da < 1e-3 and db < 1e-3
    acceptance(2, "large-w fit gives A = i, B = 0", ok, f"|A-i| = {da:.2e}, |B| = {db:.2e} (< 1e-3)")
    assert ok


def test_criterion_03_asymptotic_law(acceptance):
    k = 1 - 0.01j
    w = 1e3 * abs(k)
    dev = abs(w * transform_L(TransformPoint(k, w)).value - 1j)
    ok = dev < 1e-3
    acceptance(3, "w L(k, w) -> i at w = 1000 |k|", ok, f"|wL - i| = {dev:.2e} < 1e-3")
    assert ok


def test_criterion_04_constants_cd(acceptance):
    rep = cd_self_consistency([(0.5, 2), (1, 3), (0.25, 1.5)])
    dev = max(rep.max_dev_C, rep.max_dev_D)
    off = max(max(abs(f.C + EULER_GAMMA), abs(f.D - math.pi / 2)) for f in rep.fits)
    ok = rep.passed and len(rep.fits) == 3 and dev < 1e-6 and off < 1e-6
    acceptance(4, "C, D independent of the sample pair and equal to -gamma, pi/2", ok,
               f"max pair deviation {dev:.2e}, max distance to (-gamma, pi/2) {off:.2e} (< 1e-6)")
    assert ok


def test_criterion_05_moments_vanish(acceptance):
    values = [moment_cos_exact(r, 0) for r in range(1, 11)]
    ok = all(v == 0 for v in values)
    acceptance(5, "regularised even log-moments vanish exactly", ok, "r = 1..10 in exact rationals")
    assert ok


def test_criterion_06_vanishing_product(acceptance):
    samples = [(b, b * N_numeric(b).value) for b in DEFAULT_SCHEDULE.betas]
    ext = extrapolate_beta(samples)
    ok = abs(ext.value) < 1e-8
    acceptance(6, "beta N(beta) extrapolates to 0", ok,
               f"|limit| = {abs(ext.value):.2e} < 1e-8 ({ext.method})")
    assert ok


def test_criterion_07_ode_residuals(acceptance):
    worst5 = max(abs(ode5_residual(lambda z, a=a, b=b: F_general(z, a, b), zeta, 1e-3))
                 for a, b in ((1, 0), (0, 1))
                 for zeta in (0.3, 0.5, 0.7, 0.5 + 0.2j))
    worst16 = max(abs(ode16_residual(c, d, eta, 1e-3))
                  for c, d in ((-EULER_GAMMA, math.pi / 2), (1.0, -2.0))
                  for eta in (0.5, 1.0, 2.0))
    ok = worst5 < 1e-5 and worst16 < 1e-6
    acceptance(7, "finite-difference residuals of both equations", ok,
               f"reduced eq. {worst5:.2e} < 1e-5, log-sine eq. {worst16:.2e} < 1e-6")
    assert ok


def test_criterion_08_greens_route(acceptance):
    rng = np.random.default_rng(SEED)
    gaps = []
    while len(gaps) < 100:
        k = complex(rng.uniform(0.2, 3.0), rng.uniform(-2.0, 0.0))
        w = complex(rng.uniform(-6.0, 6.0), rng.uniform(-3.0, 3.0))
        try:
            gaps.append(transform_identity(TransformPoint(k, w)).gap)
        except (DomainError, BranchPointProximity):
            continue
    max_gap = max(gaps)

    k = 1 - 0.3j
    points = [(1.0, 0.7), (0.0, 0.5), (2.0, -1.0), (-1.5, 0.6), (0.3, 1.2)]
    inv_err = 0.0
    tails = 0.0
    for x, y in points:
        res = inverse_transform_G(k, x, y)
        direct = greens_direct(x, y, k)
        inv_err = max(inv_err, abs(res.value - direct) / abs(direct))
        tails = max(tails, res.tail_bound)

    ratio = helmholtz_residual(1.0, GridSpec.square(0.5, 2.5, 0.01)).refinement_ratio
    ok = max_gap < 1e-13 and inv_err < 1e-4 and tails < 1e-5 and 3.5 <= ratio <= 4.5
    acceptance(8, "Green's-function route", ok,
               f"identity gap {max_gap:.1e} < 1e-13 on 100 points; inversion rel err {inv_err:.1e} < 1e-4 "
               f"(tail <= {tails:.1e}); Helmholtz refinement ratio {ratio:.3f} in [3.5, 4.5]")
    assert ok


def test_criterion_09_symmetries(acceptance):
    pts = [(1 - 0.1j, 0.5), (2 - 0.5j, 3.0), (0.8 - 0.05j, 1.2), (1 - 0.1j, 2.5), (1.0, 0.4)]
    even = all(transform_L(TransformPoint(k, w)).value == transform_L(TransformPoint(k, -w)).value
               for k, w in pts)

    scale_dev = 0.0
    for k, w in pts[:4]:
        base = w * transform_L(TransformPoint(k, w)).value
        for lam in (0.5, 2.0, 3.0):
            other = lam * w * transform_L(TransformPoint(lam * k, lam * w)).value
            scale_dev = max(scale_dev, abs(other - base) / abs(base))

    rng = np.random.default_rng(SEED + 1)
    conj_dev = 0.0
    n = 0
    while n < 20:
        k = complex(rng.uniform(0.2, 3.0), rng.uniform(-2.0, 0.0))
        w = complex(rng.uniform(-6.0, 6.0), rng.uniform(-3.0, 3.0))
        try:
            a = closed_form_L(TransformPoint(k, w))
            b = closed_form_L(TransformPoint(k.conjugate(), w.conjugate(), kind=1))
        except (DomainError, BranchPointProximity):
            continue
        conj_dev = max(conj_dev, abs(a.conjugate() - b) / abs(a))
        n += 1

    ok = even and scale_dev < 1e-6 and conj_dev < 1e-10
    acceptance(9, "evenness, scaling and conjugation", ok,
               f"evenness bit-exact: {even}; scaling rel dev {scale_dev:.1e} < 1e-6; "
               f"conjugation rel dev {conj_dev:.1e} < 1e-10 on 20 points")
    assert ok


def test_criterion_10_special_functions(acceptance):
    rng = np.random.default_rng(SEED + 2)
    # 50 points uniform by area in the lower half annulus 0.1 <= |z| <= 30
    r = np.sqrt(rng.uniform(0.1**2, 30.0**2, 50))
    theta = rng.uniform(-math.pi, 0.0, 50)
    z = r * np.exp(1j * theta)
    wr = bessel_j0(z) * bessel_y0_prime(z) - bessel_j0_prime(z) * bessel_y0(z)
    rel = np.abs(wr - 2 / (np.pi * z)) / np.abs(2 / (np.pi * z))
    wronskian_ok = bool(np.all(rel < 1e-8))
    n_bad = int(np.sum(rel >= 1e-8))

    R = DEFAULT_CONFIG.crossover_radius
    rc = rng.uniform(0.9 * R, 1.1 * R, 200)
    tc = rng.uniform(-math.pi, 0.0, 200)
    zc = rc * np.exp(1j * tc)
    cont = 0.0
    for which in ("j0", "y0", "dj0", "dy0"):
        a, b = series_and_asymptotic(zc, which=which)
        cont = max(cont, float(np.max(np.abs(a - b) / np.maximum(np.abs(a), np.abs(b)))))
    continuity_ok = cont < 1e-9

    ok = wronskian_ok and continuity_ok
    acceptance(10, "Wronskian and series/asymptotic crossover", ok,
               f"Wronskian rel err max {rel.max():.1e}, {n_bad}/50 points >= 1e-8 "
               f"(worst at Im z = {z[np.argmax(rel)].imag:.1f}); "
               f"crossover continuity {cont:.1e} < 1e-9")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
