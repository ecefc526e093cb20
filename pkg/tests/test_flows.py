import math

import numpy as np
import pytest

from loewnerkit import (
    CLOSED_FORM,
    RUNGE_KUTTA,
    AtomicMeasure,
    ChordalFlowSpec,
    OdeConfig,
    RadialFlowSpec,
    chordal_transition,
    flow_trace,
    koebe_eval,
    radial_transition,
    sqrt_halfplane,
)
from loewnerkit.errors import DomainError, FlowEscapeError


def _disk_sample(rng, n, rmax=0.9):
    r = rmax * np.sqrt(rng.uniform(size=n))
    theta = rng.uniform(0.0, 2.0 * np.pi, size=n)
    return [complex(a, b) for a, b in zip(r * np.cos(theta), r * np.sin(theta))]


def test_koebe_eval_hand_values():
    assert koebe_eval(0.0, 0.0) == 0.0
    assert abs(koebe_eval(0.0, 0.5) - 2.0) < 1e-15
    assert abs(koebe_eval(1.0, 0.5) - 2.0 * math.e) < 1e-14


class TestRadial:
    def test_zero_length_flow_is_identity(self):
        spec = RadialFlowSpec.koebe(0.0, 1.0)
        z = 0.3 - 0.2j
        assert radial_transition(spec, 0.0, z) == z

    def test_origin_is_fixed(self):
        spec = RadialFlowSpec.koebe(0.0, 1.0)
        assert radial_transition(spec, 0.7, 0.0) == 0.0
        spec_rk = RadialFlowSpec.koebe(0.0, 1.0, backend=RUNGE_KUTTA)
        assert radial_transition(spec_rk, 0.7, 0.0) == 0.0

    def test_closed_form_inverts_koebe_map(self):
        # B solves e^t B/(1-B)^2 = e^a z/(1-z)^2.
        spec = RadialFlowSpec.koebe(0.2, 1.3)
        z = 0.4 + 0.3j
        t = 0.9
        b = radial_transition(spec, t, z)
        assert abs(b) < 1.0
        assert abs(koebe_eval(t, b) - koebe_eval(0.2, z)) < 1e-12

    @pytest.mark.parametrize("seed", [0, 1])
    def test_backend_agreement(self, seed):
        rng = np.random.RandomState(seed)
        spec_cf = RadialFlowSpec.koebe(0.0, 1.0)
        spec_rk = RadialFlowSpec.koebe(0.0, 1.0, backend=RUNGE_KUTTA)
        for z in _disk_sample(rng, 50, rmax=0.95):
            t = rng.uniform(0.0, 1.0)
            b_cf = radial_transition(spec_cf, t, z)
            b_rk = radial_transition(spec_rk, t, z)
            assert abs(b_cf - b_rk) <= 1e-6
            assert abs(b_cf) < 1.0

    def test_semigroup_law(self):
        rng = np.random.RandomState(3)
        for _ in range(100):
            r, s, t = np.sort(rng.uniform(0.0, 1.0, size=3))
            if t - r < 1e-3:
                continue
            z = _disk_sample(rng, 1)[0]
            b_rs = radial_transition(RadialFlowSpec.koebe(r, s), s, z)
            b_st = radial_transition(RadialFlowSpec.koebe(s, t), t, b_rs)
            b_rt = radial_transition(RadialFlowSpec.koebe(r, t), t, z)
            assert abs(b_st - b_rt) <= 1e-9

    def test_piecewise_driver_runs_and_stays_in_disk(self):
        mix = AtomicMeasure(((-1.0, 0.5), (1.0, 0.5)))
        driver = ((0.0, AtomicMeasure.dirac(-1.0)), (0.5, mix))
        spec = RadialFlowSpec(0.0, 1.0, driver, backend=RUNGE_KUTTA)
        b = radial_transition(spec, 1.0, 0.5 + 0.2j)
        assert abs(b) < 1.0
        # first half agrees with the pure Koebe flow
        koebe_half = radial_transition(RadialFlowSpec.koebe(0.0, 0.5), 0.5, 0.5 + 0.2j)
        assert abs(radial_transition(spec, 0.5, 0.5 + 0.2j) - koebe_half) <= 1e-9

    def test_time_outside_interval_rejected(self):
        spec = RadialFlowSpec.koebe(0.0, 1.0)
        with pytest.raises(DomainError):
            radial_transition(spec, 1.5, 0.3)

    def test_escape_reported(self):
        spec = RadialFlowSpec.koebe(0.0, 1.0, backend=RUNGE_KUTTA)
        with pytest.raises(FlowEscapeError):
            radial_transition(spec, 1.0, 0.9999999999)

    def test_closed_form_requires_koebe_driver(self):
        mix = AtomicMeasure(((-1.0, 0.5), (1.0, 0.5)))
        with pytest.raises(ValueError):
            RadialFlowSpec(0.0, 1.0, ((0.0, mix),), backend=CLOSED_FORM)

    def test_step_larger_than_interval_rejected(self):
        with pytest.raises(ValueError):
            RadialFlowSpec.koebe(0.0, 0.5, backend=RUNGE_KUTTA, ode=OdeConfig(step=0.6))

    def test_unsorted_breakpoints_rejected(self):
        d = ((0.5, AtomicMeasure.dirac(-1.0)), (0.0, AtomicMeasure.dirac(-1.0)))
        with pytest.raises(ValueError):
            RadialFlowSpec(0.0, 1.0, d, backend=RUNGE_KUTTA)


class TestChordal:
    def test_start_is_identity(self):
        spec = ChordalFlowSpec.basic_slit(0.0, 1.0)
        assert chordal_transition(spec, 0.0, 1j) == 1j

    def test_hand_values(self):
        spec = ChordalFlowSpec.basic_slit(0.0, 1.0)
        assert abs(chordal_transition(spec, 1.0, 1j) - 1j * math.sqrt(3)) < 1e-15
        spec_half = ChordalFlowSpec.basic_slit(0.0, 0.5)
        assert abs(chordal_transition(spec_half, 0.5, 2j) - 1j * math.sqrt(5)) < 1e-15

    @pytest.mark.parametrize("seed", [0, 1])
    def test_backend_agreement_and_branch_sanity(self, seed):
        rng = np.random.RandomState(seed)
        cf = ChordalFlowSpec.basic_slit(0.0, 1.0)
        rk = ChordalFlowSpec.basic_slit(0.0, 1.0, backend=RUNGE_KUTTA)
        for _ in range(50):
            z = complex(rng.uniform(-2, 2), rng.uniform(0.3, 2.1))
            s = rng.uniform(0.0, 1.0)
            b_cf = chordal_transition(cf, s, z)
            assert b_cf.imag > 0.0
            assert abs(b_cf - chordal_transition(rk, s, z)) <= 1e-6

    def test_ode_residual_of_closed_form(self):
        # Central difference of B in s matches -1/B to 1e-5 relative.
        spec = ChordalFlowSpec.basic_slit(0.0, 1.0)
        rng = np.random.RandomState(5)
        h = 1e-4
        for _ in range(100):
            z = complex(rng.uniform(-2, 2), rng.uniform(0.5, 2.1))
            s = rng.uniform(h, 1.0 - h)
            fd = (chordal_transition(spec, s + h, z) - chordal_transition(spec, s - h, z)) / (2 * h)
            rhs = -1.0 / chordal_transition(spec, s, z)
            assert abs(fd - rhs) / max(1.0, abs(rhs)) <= 1e-5

    def test_measure_driven_flow(self):
        nu = AtomicMeasure(((0.0, 0.6), (1.0, 0.4)))
        spec = ChordalFlowSpec(0.0, 1.0, ((0.0, nu),), backend=RUNGE_KUTTA)
        b = chordal_transition(spec, 1.0, 1j)
        assert b.imag > 0.0

    def test_escape_reported(self):
        spec = ChordalFlowSpec.basic_slit(0.0, 1.0, backend=RUNGE_KUTTA)
        with pytest.raises(FlowEscapeError):
            chordal_transition(spec, 1.0, 1.0 + 1e-10j)

    def test_closed_form_requires_slit_driver(self):
        with pytest.raises(ValueError):
            ChordalFlowSpec(0.0, 1.0, ((0.0, AtomicMeasure.dirac(0.0)),), backend=CLOSED_FORM)


def test_sqrt_halfplane_self_test():
    rng = np.random.RandomState(11)
    for _ in range(1000):
        z = complex(rng.uniform(-5, 5), rng.uniform(0.01, 5))
        assert abs(sqrt_halfplane(z * z) - z) <= 1e-12


class TestTrace:
    def test_degenerate_interval(self):
        spec = RadialFlowSpec.koebe(0.4, 0.4)
        z = 0.2 + 0.1j
        assert flow_trace(spec, z, 2) == [(0.4, z), (0.4, z)]

    def test_koebe_magnitude_strictly_decreasing(self):
        spec = RadialFlowSpec.koebe(0.0, 1.0)
        mags = [abs(b) for _, b in flow_trace(spec, 0.3, 11)]
        assert all(b < a for a, b in zip(mags, mags[1:]))

    def test_slit_midpoints(self):
        spec = ChordalFlowSpec.basic_slit(0.0, 1.0)
        trace = flow_trace(spec, 1j, 3)
        expected = [(0.0, 1j), (0.5, 1j * math.sqrt(2)), (1.0, 1j * math.sqrt(3))]
        for (t, b), (te, be) in zip(trace, expected):
            assert t == te and abs(b - be) < 1e-15

    def test_too_few_samples_rejected(self):
        with pytest.raises(ValueError):
            flow_trace(RadialFlowSpec.koebe(0.0, 1.0), 0.1, 1)
