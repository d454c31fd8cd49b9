"""Oscillatory quadrature, regularisation and extrapolation."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hankelcos.branch import TransformPoint, closed_form_L
from hankelcos.errors import DomainError, IllConditioned, NoConvergence
from hankelcos.quad import (
    DEFAULT_SCHEDULE,
    PartitionPlan,
    RegularizationSchedule,
    damped_trig_quad,
    extrapolate_beta,
    log_cos_integral,
    log_sin_M,
    moment_cos_exact,
    oscillatory_quad,
    reference_cos,
    reference_sin,
    regularized_L,
    transform_L,
    wynn_epsilon,
)
from hankelcos.specfun import EULER_GAMMA

# mpmath (30 digits), direct quadrature of exp(-x/20) H0^(2)((1-0.1i) x) cos(x/2)
MP_DAMPED_L = 1.11247443451884772022261937653 + 0.199154672814619357018654842239j
# mpmath quadrature of exp(-eta x) sin(x) log(x) and of the cosine analogue
MP_N1 = -0.0691955458920286028497336524958
MP_N_HALF = -0.108170465329273989584901524118
MP_M_2_3 = -0.277960275723249657686795862351
MP_LOGCOS_1 = -0.854593709289476912465394498316


class TestEngine:
    @pytest.mark.parametrize("beta", [0.1, 0.5, 1.0, 2.0])
    def test_reproduces_elementary_integrals(self, beta):
        assert abs(damped_trig_quad(beta, "cos").value - reference_cos(beta)) < 1e-10
        assert abs(damped_trig_quad(beta, "sin").value - reference_sin(beta)) < 1e-10

    def test_reference_values(self):
        assert reference_cos(1) == 0.5
        assert abs(reference_cos(2) - 0.4) < 1e-16
        assert reference_sin(1) == 0.5
        assert abs(reference_sin(0.001) - 1 / 1.000001) < 1e-16
        with pytest.raises(DomainError):
            reference_cos(0)

    def test_sine_at_half(self):
        assert abs(damped_trig_quad(0.5, "sin").value - 0.8) < 1e-10

    def test_wynn_on_alternating_series(self):
        partial = np.cumsum([(-1) ** n / (n + 1) for n in range(15)])
        assert abs(wynn_epsilon(partial) - math.log(2)) < 1e-9
        with pytest.raises(ValueError):
            wynn_epsilon([])

    def test_log_model_subtraction(self):
        # int_0^inf exp(-x) log x dx = -gamma
        res = oscillatory_quad(lambda x: np.exp(-x) * np.log(x), first=1.0, spacing=1.0,
                               max_frequency=1.0, log_model=((1.0, 1.0),))
        assert abs(res.value + EULER_GAMMA) < 1e-12

    def test_budget_exhaustion(self):
        plan = PartitionPlan(max_intervals=3)
        with pytest.raises(NoConvergence):
            oscillatory_quad(lambda x: np.cos(x) / (1 + x), first=math.pi / 2, spacing=math.pi,
                             max_frequency=1.0, plan=plan)

    def test_plan_validation(self):
        with pytest.raises(ValueError):
            PartitionPlan(breakpoints=(1.0, 2.0))
        with pytest.raises(ValueError):
            PartitionPlan(max_intervals=1)
        with pytest.raises(ValueError):
            RegularizationSchedule(betas=(0.1, 0.2, 0.05))
        with pytest.raises(ValueError):
            RegularizationSchedule(betas=(0.1, 0.05), extrapolation_order=2)

    def test_explicit_breakpoints(self):
        plan = PartitionPlan(breakpoints=(0.0, math.pi / 2, 3 * math.pi / 2))
        res = oscillatory_quad(lambda x: np.exp(-x) * np.cos(x), first=1.0, spacing=1.0,
                               max_frequency=2.0, plan=plan)
        assert abs(res.value - 0.5) < 1e-12


class TestRegularizedL:
    def test_strip_at_zero_damping(self):
        res = regularized_L(TransformPoint(1 - 0.5j, 0), 0.0)
        assert abs(res.value - (0.8 + 0.4j)) < 1e-8

    def test_high_precision_damped_value(self):
        res = regularized_L(TransformPoint(1 - 0.1j, 0.5), 0.05)
        assert abs(res.value - MP_DAMPED_L) <= res.abs_error_estimate
        assert abs(res.value - MP_DAMPED_L) < 1e-11

    def test_even_in_w(self):
        a = regularized_L(TransformPoint(1, 0.5), 0.1).value
        b = regularized_L(TransformPoint(1, -0.5), 0.1).value
        assert a == b

    def test_domain(self):
        with pytest.raises(DomainError):
            regularized_L(TransformPoint(1, 0.5), 0.0)
        with pytest.raises(DomainError):
            regularized_L(TransformPoint(1 - 0.1j, 0.5 + 0.5j), 0.2)
        with pytest.raises(DomainError):
            regularized_L(TransformPoint(1 - 0.1j, 0.5), -0.1)
        with pytest.raises(DomainError):
            regularized_L(TransformPoint(1 + 0.1j, 0.5, kind=1), 0.1)


class TestExtrapolation:
    betas = DEFAULT_SCHEDULE.betas

    def test_vanishing_rational(self):
        ext = extrapolate_beta([(b, b / (1 + b * b)) for b in self.betas])
        assert abs(ext.value) < 1e-10

    def test_unit_limit(self):
        ext = extrapolate_beta([(b, 1 / (1 + b * b)) for b in self.betas])
        assert abs(ext.value - 1) < 1e-10

    def test_constant(self):
        for method in ("polynomial", "rational", "auto"):
            value = extrapolate_beta([(b, 2.5 - 1j) for b in self.betas], method=method).value
            assert abs(value - (2.5 - 1j)) <= 4 * np.finfo(float).eps * abs(2.5 - 1j)

    def test_polynomial_exact_for_polynomials(self):
        ext = extrapolate_beta([(b, 3 - 2 * b + b**4) for b in self.betas], method="polynomial")
        assert abs(ext.value - 3) < 1e-12

    def test_errors(self):
        with pytest.raises(IllConditioned):
            extrapolate_beta([(0.1, 1.0), (0.05, 1.0)], order=4)
        with pytest.raises(IllConditioned):
            extrapolate_beta([(0.1, 1.0), (0.1, 1.0), (0.05, 1.0)], order=2)
        with pytest.raises(IllConditioned):
            # nearly coincident nodes make the extrapolation weights explode
            extrapolate_beta([(1.0 + i * 1e-4, 1.0) for i in range(6)], order=5)
        with pytest.raises(ValueError):
            extrapolate_beta([(b, 1.0) for b in self.betas], method="spline")


class TestTransformL:
    def test_lossy_origin(self):
        res = transform_L(TransformPoint(1 - 0.01j, 0))
        assert abs(res.value - 1 / (1 - 0.01j)) < 1e-7

    def test_inside_unit_interval(self):
        p = TransformPoint(1 - 0.2j, 0.75)
        assert abs(transform_L(p).value - closed_form_L(p)) < 1e-7

    def test_beyond_the_crossing(self):
        p = TransformPoint(1 - 0.1j, 3.0)
        ref = closed_form_L(p)
        assert abs(ref.imag) > 10 * abs(ref.real)
        assert abs(transform_L(p).value - ref) < 1e-6

    @pytest.mark.parametrize("k,w", [(1.0, 0.5), (1.0, 2.0), (2.0, 0.7)])
    def test_real_wavenumber_limit(self, k, w):
        p = TransformPoint(k, w)
        assert abs(transform_L(p).value - closed_form_L(p)) / abs(closed_form_L(p)) < 1e-9

    def test_outside_strip_complex_w(self):
        p = TransformPoint(1 - 0.5j, 2 - 0.4j)
        assert abs(transform_L(p).value - closed_form_L(p)) / abs(closed_form_L(p)) < 1e-9

    def test_error_estimate_is_honest(self):
        p = TransformPoint(2 - 0.5j, 4.0)
        res = transform_L(p)
        assert abs(res.value - closed_form_L(p)) <= 10 * res.abs_error_estimate + 1e-14


class TestLogIntegrals:
    def test_N_at_one(self):
        res = log_sin_M(1.0, 1.0)
        assert abs(res.value - MP_N1) < 1e-12

    def test_N_at_half(self):
        assert abs(log_sin_M(0.5, 1.0).value - MP_N_HALF) < 1e-12

    def test_general_frequency(self):
        assert abs(log_sin_M(2.0, 3.0).value - MP_M_2_3) < 1e-12

    def test_scaling_identity_example(self):
        a = log_sin_M(2.0, 3.0)
        b = log_sin_M(2.0 / 3.0, 1.0)
        composite = b.value / 3 - 3 * math.log(3) / 13
        assert abs(a.value - composite) <= 2 * max(a.abs_error_estimate, b.abs_error_estimate, 1e-15)

    @settings(max_examples=20, deadline=None)
    @given(beta=st.floats(0.05, 5.0), xi=st.floats(0.2, 5.0))
    def test_scaling_identity(self, beta, xi):
        a = log_sin_M(beta, xi)
        b = log_sin_M(beta / xi, 1.0)
        composite = b.value / xi - xi * math.log(xi) / (beta * beta + xi * xi)
        scale = max(1.0, abs(a.value))
        assert abs(a.value - composite) <= 10 * (a.abs_error_estimate + b.abs_error_estimate / xi) + 1e-12 * scale

    def test_vanishing_product(self):
        samples = [(b, b * log_sin_M(b, 1.0).value) for b in DEFAULT_SCHEDULE.betas]
        assert abs(extrapolate_beta(samples).value) < 1e-8

    def test_log_cos_at_one(self):
        res = log_cos_integral(1.0)
        assert abs(res.direct.value - MP_LOGCOS_1) < 1e-12
        assert abs(res.decomposed - MP_LOGCOS_1) < 1e-12

    def test_log_cos_routes_agree(self):
        res = log_cos_integral(10.0)
        assert res.gap < 1e-9

    def test_log_cos_limit(self):
        samples = [(b, log_cos_integral(b).value) for b in DEFAULT_SCHEDULE.betas]
        assert abs(extrapolate_beta(samples).value + math.pi / 2) < 1e-8

    def test_domain(self):
        with pytest.raises(DomainError):
            log_sin_M(0.0, 1.0)
        with pytest.raises(DomainError):
            log_cos_integral(-1.0)


class TestMoments:
    def test_examples(self):
        assert moment_cos_exact(0, 1) == Fraction(1, 2)
        assert moment_cos_exact(1, 1) == Fraction(-1, 2)

    @pytest.mark.parametrize("r", range(1, 11))
    def test_vanish_at_zero(self, r):
        assert moment_cos_exact(r, 0) == 0

    def test_second_derivative_formula(self):
        for beta in (Fraction(1, 3), Fraction(2), Fraction(7, 5)):
            expected = (2 * beta**3 - 6 * beta) / (1 + beta**2) ** 3
            assert moment_cos_exact(1, beta) == expected

    def test_matches_quadrature(self):
        res = oscillatory_quad(lambda x: np.exp(-x) * x**2 * np.cos(x), first=math.pi / 2,
                               spacing=math.pi, max_frequency=2.0)
        assert abs(res.value - float(moment_cos_exact(1, 1))) < 1e-10

    def test_negative_damping(self):
        with pytest.raises(DomainError):
            moment_cos_exact(1, -1)
