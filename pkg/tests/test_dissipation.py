"""Both first-order dissipation routes, the transition sum, and eta scans.

Frozen expectations come from 30-digit evaluation of the closed-form
transforms chained through the dissipation formulas (cross-checked with
mpmath.quad); the quadrature paths must land on them within the stated
grid tolerances.
"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casfric import (
    CouplingSignal,
    ExponentialRamp,
    Flyby,
    GaussianPulse,
    PhysicalParams,
    SampledProfile,
    SymmetricRamp,
    TailSpanError,
    TimeGrid,
    TransitionAmplitude,
    adiabatic_scan,
    compare_routes,
    delta_e_spectral,
    delta_e_time_domain,
    dissipation_from_transitions,
    interaction_matrix_element,
    sample,
    spectral_transition_coefficient,
    time_domain_amplitude,
)
from casfric.dissipation import ramp_tail_span

PARAMS = PhysicalParams(mass=1.0, omega=1.0)

# Gaussian pulse q0 = 0.01, tau = 1 at m = w = hbar = 1:
#   qhat(-2) = 0.01*sqrt(pi)*exp(-1)     = 6.5204933217329218e-3
#   I(inf)   = -(i/2)*qhat(-2)           = -3.2602466608664609e-3 i
#   dE       = 8*h*w*b^2*|I|^2           = 2.1258416579381816e-5
GAUSS_AMPLITUDE = -3.2602466608664609e-3j
GAUSS_DELTA_E = 2.1258416579381816e-5

# Exponential ramp gamma = 1e-3, eta = 1 at m = w = hbar = 1:
#   qhat(-2) = 1e-3/(1-2i)^2 = (-1.2 + 1.6i)e-4
#   I(inf)   = (8 + 6i)e-5, |I|^2 = 1e-8, dE = 2e-8
RAMP_AMPLITUDE = 8e-5 + 6e-5j
RAMP_DELTA_E = 2e-8


def gauss_signal(q0=0.01, n=4801):
    return sample(GaussianPulse(q0=q0, tau=1.0), TimeGrid(-12.0, 12.0, n))


def ramp_signal(gamma=1e-3, n=16001):
    return sample(ExponentialRamp(gamma=gamma, eta=1.0), TimeGrid(0.0, 40.0, n))


def zero_signal():
    return CouplingSignal(TimeGrid(-1.0, 1.0, 21), np.zeros(21))


class TestTimeDomainAmplitude:
    def test_zero_signal(self):
        assert time_domain_amplitude(zero_signal(), PARAMS) == 0.0

    def test_gaussian_pulse_frozen_value(self):
        amp = time_domain_amplitude(gauss_signal(), PARAMS)
        np.testing.assert_allclose(amp, GAUSS_AMPLITUDE, rtol=1e-9)

    def test_exponential_ramp_frozen_value(self):
        amp = time_domain_amplitude(ramp_signal(), PARAMS)
        np.testing.assert_allclose(amp, RAMP_AMPLITUDE, rtol=1e-5)
        np.testing.assert_allclose(abs(amp) ** 2, 1e-8, rtol=1e-5)


class TestDeltaETimeDomain:
    def test_zero_signal(self):
        assert delta_e_time_domain(zero_signal(), PARAMS) == 0.0

    def test_gaussian_pulse_frozen_value(self):
        np.testing.assert_allclose(delta_e_time_domain(gauss_signal(), PARAMS), GAUSS_DELTA_E, rtol=1e-9)

    @given(lam=st.floats(min_value=1e-3, max_value=1e3))
    @settings(max_examples=25, deadline=None)
    def test_quadratic_coupling_scaling(self, lam):
        signal = gauss_signal(n=801)
        base = delta_e_time_domain(signal, PARAMS)
        scaled = delta_e_time_domain(signal.scaled(lam), PARAMS)
        np.testing.assert_allclose(scaled, lam**2 * base, rtol=1e-12)

    def test_nonnegative_for_odd_profiles(self):
        signal = sample(SymmetricRamp(gamma=-3.0, eta=0.7), TimeGrid(-60.0, 60.0, 24001))
        assert delta_e_time_domain(signal, PARAMS) >= 0.0


class TestInteractionMatrixElement:
    def test_unit_parameters(self):
        assert interaction_matrix_element(PARAMS) == -0.5

    def test_heavy_slow_oscillator(self):
        assert interaction_matrix_element(PhysicalParams(mass=2.0, omega=0.25)) == -1.0

    @given(
        m=st.floats(min_value=1e-3, max_value=1e3),
        w=st.floats(min_value=1e-3, max_value=1e3),
    )
    def test_always_strictly_negative(self, m, w):
        assert interaction_matrix_element(PhysicalParams(mass=m, omega=w)) < 0.0


class TestSpectralTransitionCoefficient:
    def test_zero_transform(self):
        assert spectral_transition_coefficient(0.0j, PARAMS) == 0.0

    def test_reduces_to_twice_b_times_amplitude(self):
        """With qhat(-2w) = 2i*hbar*I the coefficient is exactly 2*b*I."""
        amp = 0.3 - 0.4j
        qhat = 2j * PARAMS.hbar * amp
        coeff = spectral_transition_coefficient(qhat, PARAMS)
        np.testing.assert_allclose(coeff, 2.0 * 0.5 * amp, rtol=1e-15)

    def test_gaussian_benchmark_value(self):
        qhat = 6.5204933217329218e-3 + 0.0j
        coeff = spectral_transition_coefficient(qhat, PARAMS)
        np.testing.assert_allclose(coeff, -3.2602466608664609e-3j, rtol=1e-15)


class TestDeltaESpectral:
    def test_zero_signal(self):
        assert delta_e_spectral(zero_signal(), PARAMS) == 0.0

    def test_exponential_ramp_closed_form(self):
        np.testing.assert_allclose(
            delta_e_spectral(ExponentialRamp(gamma=1e-3, eta=1.0), PARAMS), RAMP_DELTA_E, rtol=1e-14
        )

    def test_exponential_ramp_quadrature(self):
        np.testing.assert_allclose(delta_e_spectral(ramp_signal(), PARAMS), RAMP_DELTA_E, rtol=1e-5)

    def test_rejects_profiles_without_closed_form(self):
        with pytest.raises(TypeError):
            delta_e_spectral(Flyby(charge=1.0, d=1.0, v=1.0), PARAMS)

    @pytest.mark.parametrize(
        "signal_factory",
        [
            lambda: gauss_signal(),
            lambda: ramp_signal(),
            lambda: sample(SymmetricRamp(gamma=1e-3, eta=1.0), TimeGrid(-40.0, 40.0, 32001)),
            lambda: sample(Flyby(charge=1.0, d=1.0, v=1.0), TimeGrid(-2200.0, 2200.0, 88001)),
        ],
    )
    def test_agrees_with_time_domain_route(self, signal_factory):
        """The two routes share only the raw samples, yet must coincide."""
        signal = signal_factory()
        de_spec = delta_e_spectral(signal, PARAMS)
        de_time = delta_e_time_domain(signal, PARAMS)
        assert abs(de_spec - de_time) / max(de_spec, 1e-300) <= 1e-12


class TestDissipationFromTransitions:
    LEVELS = [((0, 0), 1.0), ((1, 1), 3.0), ((2, 0), 3.0)]
    GROUND = {(0, 0): 1.0}

    def test_empty_amplitude_set(self):
        assert dissipation_from_transitions(self.LEVELS, self.GROUND, []) == 0.0

    def test_single_channel_recovers_route_formula(self):
        """Gap 2*hbar*w and B = 4 b^2 |I|^2 combine to 8 hbar w b^2 |I|^2."""
        amp_i = 1.2e-3 - 0.7e-3j
        channel = TransitionAmplitude((0, 0), (1, 1), 2.0 * 0.5 * amp_i)
        result = dissipation_from_transitions(self.LEVELS, self.GROUND, [channel])
        expected = 8.0 * 1.0 * 1.0 * 0.25 * abs(amp_i) ** 2
        np.testing.assert_allclose(result, expected, rtol=1e-15)

    def test_two_half_channels_sum_to_the_same_total(self):
        amp = 3e-3 + 1e-3j
        one = dissipation_from_transitions(
            self.LEVELS, self.GROUND, [TransitionAmplitude((0, 0), (1, 1), amp)]
        )
        halved = amp / np.sqrt(2.0)
        two = dissipation_from_transitions(
            self.LEVELS,
            self.GROUND,
            [
                TransitionAmplitude((0, 0), (1, 1), halved),
                TransitionAmplitude((0, 0), (2, 0), halved),
            ],
        )
        np.testing.assert_allclose(two, one, rtol=1e-14)

    def test_rejects_negative_probability(self):
        with pytest.raises(ValueError, match="negative"):
            dissipation_from_transitions(self.LEVELS, {(0, 0): 1.5, (1, 1): -0.5}, [])

    def test_rejects_unnormalized_occupation(self):
        with pytest.raises(ValueError, match="sum"):
            dissipation_from_transitions(self.LEVELS, {(0, 0): 0.9}, [])

    def test_rejects_unknown_states(self):
        with pytest.raises(ValueError, match="unknown"):
            dissipation_from_transitions(
                self.LEVELS, self.GROUND, [TransitionAmplitude((0, 0), (9, 9), 0.1)]
            )
        with pytest.raises(ValueError, match="unknown"):
            dissipation_from_transitions(self.LEVELS, {(5, 5): 1.0}, [])

    def test_strained_flag_threshold(self):
        assert not TransitionAmplitude((0, 0), (1, 1), 0.31j).perturbation_strained
        assert TransitionAmplitude((0, 0), (1, 1), 0.5j).perturbation_strained


class TestCompareRoutes:
    def test_zero_signal_report(self):
        report = compare_routes(zero_signal(), PARAMS, routes=("barton", "hb"))
        assert report.delta_e_time_domain == 0.0
        assert report.delta_e_spectral == 0.0
        assert report.relative_spread == 0.0
        assert not report.validity_flag

    def test_four_route_benchmark(self):
        report = compare_routes(
            gauss_signal(), PARAMS, routes=("barton", "hb", "mode_oracle", "fock_oracle"),
            fock_truncation=8, fock_substeps=2,
        )
        values = report.populated()
        assert set(values) == {"barton", "hb", "mode_oracle", "fock_oracle"}
        assert report.relative_spread < 3e-4
        assert abs(values["barton"] - values["hb"]) / values["barton"] <= 1e-12
        assert not report.validity_flag
        assert not report.tail_warning

    def test_validity_flag_trips_at_strained_coupling(self):
        report = compare_routes(gauss_signal(q0=1.1), PARAMS, routes=("barton", "hb"))
        assert report.validity_flag

    def test_unknown_route_rejected(self):
        with pytest.raises(ValueError, match="unknown routes"):
            compare_routes(zero_signal(), PARAMS, routes=("barton", "kubo"))
        with pytest.raises(ValueError, match="at least one"):
            compare_routes(zero_signal(), PARAMS, routes=())

    def test_tail_warning_recorded(self):
        narrow = sample(GaussianPulse(q0=0.01, tau=1.0), TimeGrid(-2.0, 2.0, 41))
        report = compare_routes(narrow, PARAMS, routes=("hb",))
        assert report.tail_warning


class TestAdiabaticScan:
    def test_symmetric_ramp_slope_near_two(self):
        result = adiabatic_scan(
            SymmetricRamp(gamma=1e-3, eta=1.0), [0.002, 0.005, 0.01], PARAMS, routes=("hb",)
        )
        assert 1.95 < result.slope_delta_e < 2.01
        np.testing.assert_allclose(result.delta_e_times_eta, result.delta_e * result.etas, rtol=1e-15)
        assert np.all(np.diff(result.delta_e) > 0.0)

    def test_abrupt_ramp_keeps_residual_dissipation(self):
        result = adiabatic_scan(
            ExponentialRamp(gamma=1e-3, eta=1.0), [0.002, 0.005, 0.01], PARAMS, routes=("barton",)
        )
        assert abs(result.slope_delta_e) < 0.01
        assert 0.99 < result.slope_delta_e_times_eta < 1.01
        assert np.all(result.delta_e > 0.0)

    def test_reports_carry_requested_routes(self):
        result = adiabatic_scan(
            SymmetricRamp(gamma=1e-3, eta=1.0), [0.01], PARAMS, routes=("barton", "hb")
        )
        assert set(result.reports[0].populated()) == {"barton", "hb"}

    def test_rejects_non_ramp_families(self):
        with pytest.raises(TypeError, match="ramp"):
            adiabatic_scan(GaussianPulse(q0=1.0, tau=1.0), [0.01], PARAMS)

    def test_rejects_empty_or_nonpositive_etas(self):
        ramp = SymmetricRamp(gamma=1.0, eta=1.0)
        with pytest.raises(ValueError):
            adiabatic_scan(ramp, [], PARAMS)
        with pytest.raises(ValueError):
            adiabatic_scan(ramp, [0.1, -0.2], PARAMS)

    def test_huge_dt_cannot_resolve_the_tails(self):
        with pytest.raises(TailSpanError):
            adiabatic_scan(SymmetricRamp(gamma=1.0, eta=1.0), [0.1], PARAMS, dt=1e4)

    def test_tail_span_solves_the_threshold_equation(self):
        eta, rel = 0.05, 1e-12
        span = ramp_tail_span(eta, rel)
        peak = 1.0 / (np.e * eta)  # max of t*exp(-eta*t)
        np.testing.assert_allclose(span * np.exp(-eta * span) / peak, rel, rtol=1e-9)
