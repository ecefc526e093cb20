import cmath
import math

import numpy as np
import pytest

from loewnerkit import (
    BOUNDED,
    AtomicMeasure,
    ChordalFlowSpec,
    PickRepresentation,
    RadialFlowSpec,
    cayley_isometry_check,
    cayley_to_disk,
    cayley_to_halfplane,
    chordal_derivative_identity_check,
    chordal_exp_element_check,
    chordal_exp_kernel_check,
    chordal_transition,
    composite_simpson,
    dbr_element,
    flow_rule,
    gauss_legendre,
    herglotz_mixture_check,
    integrated_kernel,
    jb_kernel,
    koebe_log_element_check,
    nevanlinna_split_check,
    paley_wiener_reconstruction_check,
    pick_constant_element,
    radial_derivative_identity_check,
    radial_transition,
    resolution_check,
)
from loewnerkit.sampling import (
    DISK_RMAX_SAFE,
    HALFPLANE_RECT_SAFE,
    disk_pairs,
    disk_points,
    halfplane_pairs,
    halfplane_points,
    point_pairs,
    rect_points,
)

KOEBE = RadialFlowSpec.koebe(0.0, 1.0)
SLIT = ChordalFlowSpec.basic_slit(0.0, 1.0)
RULE = gauss_legendre(64, 0.0, 1.0)


def _pick_phi(w):
    return w - 1.0 / w


def _pick_psi(z):
    return cayley_to_disk(_pick_phi(cayley_to_halfplane(z)))


class TestQuadrature:
    def test_gauss_legendre_weights_and_interior_nodes(self):
        rule = gauss_legendre(32, 0.25, 1.75)
        assert abs(rule.weights.sum() - 1.5) <= 1e-12
        assert np.all(rule.nodes > 0.25) and np.all(rule.nodes < 1.75)

    def test_simpson_weights(self):
        rule = composite_simpson(16, 0.0, 2.0)
        assert abs(rule.weights.sum() - 2.0) <= 1e-12

    def test_simpson_odd_subintervals_rejected(self):
        with pytest.raises(ValueError):
            composite_simpson(3, 0.0, 1.0)

    def test_gauss_legendre_polynomial_exactness(self):
        rule = gauss_legendre(4, -1.0, 2.0)
        value = sum(w * x**7 for x, w in zip(rule.nodes, rule.weights))
        assert abs(value - (2.0**8 - 1.0) / 8.0) <= 1e-12

    def test_flow_rule_splits_on_driver_breakpoints(self):
        mix = AtomicMeasure(((-1.0, 0.5), (1.0, 0.5)))
        driver = ((0.0, AtomicMeasure.dirac(-1.0)), (0.4, mix))
        spec = RadialFlowSpec(0.0, 1.0, driver, backend="rk4")
        rule = flow_rule(spec, 16)
        assert len(rule.nodes) == 32
        assert abs(rule.weights.sum() - 1.0) <= 1e-12
        assert not np.any(np.isclose(rule.nodes, 0.4))


class TestIntegratedKernel:
    def test_zero_family_gives_zero(self):
        value = integrated_kernel(lambda t, z: 0.0, lambda t, z, w: 1.0, RULE, 0.2, 0.5)
        assert value == 0.0

    def test_paley_wiener_case(self):
        rule = gauss_legendre(64, -1.0, 1.0)
        report = paley_wiener_reconstruction_check(1.0, rule, point_pairs(rect_points(20, 3, (-1, 1, -0.3, 0.3))))
        assert report.passed

    def test_paley_wiener_removable_diagonal(self):
        rule = gauss_legendre(64, -1.0, 1.0)
        report = paley_wiener_reconstruction_check(1.0, rule, [(0.37, 0.37)])
        assert report.max_abs_err <= 1e-12

    def test_rule_must_cover_band(self):
        with pytest.raises(ValueError):
            paley_wiener_reconstruction_check(1.0, gauss_legendre(16, 0.0, 1.0), [(0.1, 0.2)])


class TestJbKernel:
    def test_constant_integrand(self):
        value = jb_kernel(lambda x, z, w: 1.0, lambda x, z: z, RULE, 0.2, 0.5)
        assert abs(value - 1.0) <= 1e-14

    def test_quadratic_moment(self):
        lam, z = 0.5 + 0.2j, 0.3 - 0.1j
        value = jb_kernel(lambda x, z_, w_: w_.conjugate() * z_, lambda x, z_: x * z_, RULE, lam, z)
        assert abs(value - lam.conjugate() * z / 3.0) <= 1e-14

    def test_hermitian_symmetry_scan(self):
        def kernel(x, z, w):
            return (1.0 + x) / (1.0 - w.conjugate() * z)

        def family(x, z):
            return 0.5 * z * cmath.exp(1j * x)

        rule = gauss_legendre(16, 0.0, 1.0)
        for z, lam in disk_pairs(100, 21):
            a = jb_kernel(kernel, family, rule, lam, z)
            b = jb_kernel(kernel, family, rule, z, lam)
            assert abs(a - b.conjugate()) <= 1e-12


class TestResolution:
    def test_origin_pair_exact(self):
        report = resolution_check(KOEBE, RULE, [(0.0, 0.0)])
        assert report.max_abs_err == 0.0

    def test_degenerate_interval(self):
        flow = RadialFlowSpec.koebe(0.3, 0.3)
        rule = gauss_legendre(8, 0.3, 0.3)
        report = resolution_check(flow, rule, [(0.2, 0.4j)])
        assert report.max_abs_err <= 1e-15

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_seeded_pairs_within_tolerance(self, seed):
        report = resolution_check(KOEBE, RULE, disk_pairs(10, seed, rmax=DISK_RMAX_SAFE))
        assert report.passed and report.max_abs_err <= 1e-8

    def test_node_doubling_reduces_error_to_floor(self):
        pairs = disk_pairs(10, 1, rmax=DISK_RMAX_SAFE)
        err32 = resolution_check(KOEBE, gauss_legendre(32, 0, 1), pairs).max_abs_err
        err64 = resolution_check(KOEBE, gauss_legendre(64, 0, 1), pairs).max_abs_err
        assert err64 <= max(err32 / 10.0, 1e-10)

    def test_simpson_backend_cross_check(self):
        pairs = disk_pairs(10, 1, rmax=DISK_RMAX_SAFE)
        report = resolution_check(KOEBE, composite_simpson(64, 0, 1), pairs, tol=1e-5)
        assert report.passed


class TestDerivativeIdentities:
    def test_radial_trivial_at_origin(self):
        for lam, z in ((0.0, 0.4), (0.4, 0.0)):
            report = radial_derivative_identity_check(KOEBE, 0.5, lam, z)
            assert report.max_abs_err <= 1e-11

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_radial_seeded(self, seed):
        rng = np.random.RandomState(seed)
        for lam, z in disk_pairs(20, seed, rmax=DISK_RMAX_SAFE):
            t = rng.uniform(1e-3, 1.0 - 1e-3)
            report = radial_derivative_identity_check(KOEBE, t, lam, z)
            assert report.passed

    def test_radial_example_configuration(self):
        report = radial_derivative_identity_check(KOEBE, 0.5, 0.3, 0.4j, h=1e-4)
        assert report.max_abs_err <= 1e-5

    def test_step_too_large_rejected(self):
        with pytest.raises(ValueError):
            radial_derivative_identity_check(KOEBE, 0.5, 0.3, 0.4j, h=0.6)
        with pytest.raises(ValueError):
            chordal_derivative_identity_check(SLIT, 0.5, 1j, 1 + 1j, h=0.6)

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_chordal_seeded(self, seed):
        rng = np.random.RandomState(seed)
        for alpha, z in halfplane_pairs(20, seed, rect=HALFPLANE_RECT_SAFE):
            t = rng.uniform(1e-3, 1.0 - 1e-3)
            report = chordal_derivative_identity_check(SLIT, t, alpha, z)
            assert report.passed

    def test_chordal_example_configuration(self):
        report = chordal_derivative_identity_check(SLIT, 0.5, 1j, 1 + 1j, h=1e-4)
        assert report.max_abs_err <= 1e-5

    def test_chordal_start_quotient_is_one(self):
        # at t = r the quotient is (z - conj(alpha))/(z - conj(alpha)) = 1
        alpha, z = 0.5 + 1j, -0.3 + 0.8j
        q = (chordal_transition(SLIT, 0.0, z) - chordal_transition(SLIT, 0.0, alpha).conjugate()) / (z - alpha.conjugate())
        assert abs(q - 1.0) <= 1e-15


class TestDbrElement:
    def test_zero_weight_gives_zero_function(self):
        f = dbr_element(KOEBE, 0.0, 0.2 + 0.1j, RULE)
        assert f(0.3 - 0.4j) == 0.0

    def test_vanishes_at_origin(self):
        for h, lam in ((1.0, 0.0), (2.5, 0.3 + 0.2j), (lambda t: t, -0.4j)):
            f = dbr_element(KOEBE, h, lam, RULE)
            assert abs(f(0.0)) <= 1e-15

    def test_linearity_in_h(self):
        lam = 0.2 + 0.1j
        f1 = dbr_element(KOEBE, 1.0, lam, RULE)
        f2 = dbr_element(KOEBE, lambda t: t * t, lam, RULE)
        f12 = dbr_element(KOEBE, lambda t: 1.0 + t * t, lam, RULE)
        for z in disk_points(10, 6):
            assert abs(f12(z) - f1(z) - f2(z)) <= 1e-12


class TestKoebeLogElement:
    def test_zero_at_origin_and_degenerate_interval(self):
        report = koebe_log_element_check(KOEBE, RULE, [0.0])
        assert report.max_abs_err <= 1e-15
        flow0 = RadialFlowSpec.koebe(0.5, 0.5)
        report0 = koebe_log_element_check(flow0, gauss_legendre(8, 0.5, 0.5), [0.3 + 0.1j])
        assert report0.max_abs_err <= 1e-15

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_seeded_points(self, seed):
        report = koebe_log_element_check(KOEBE, RULE, disk_points(20, seed, rmax=DISK_RMAX_SAFE))
        assert report.passed and report.max_abs_err <= 1e-8


class TestCayleyIsometry:
    def test_identity_map_trivial(self):
        report = cayley_isometry_check(lambda z: z, disk_pairs(5, 1, rmax=DISK_RMAX_SAFE))
        assert report.max_abs_err <= 1e-12

    def test_diagonal_pair_is_real_positive(self):
        lam = 0.3 + 0.2j
        report = cayley_isometry_check(_pick_psi, [(lam, lam)])
        assert report.passed

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_seeded_pairs_and_gram(self, seed):
        pairs = disk_pairs(10, seed, rmax=DISK_RMAX_SAFE)
        gram_pts = disk_points(6, seed + 100, rmax=DISK_RMAX_SAFE)
        report = cayley_isometry_check(_pick_psi, pairs, gram_pts)
        assert report.passed and report.max_abs_err <= 1e-10

    def test_degenerate_psi_rejected(self):
        with pytest.raises(ValueError):
            cayley_isometry_check(lambda z: 1.0 + 0j, [(0.1, 0.2)])


class TestPickConstantElement:
    def test_identity_psi_gives_constant_one(self):
        rep = PickRepresentation(0.0, 1.0, AtomicMeasure(()))
        f = pick_constant_element(lambda z: z, rep)
        for z in disk_points(5, 2):
            assert abs(f(z) - 1.0) <= 1e-15

    def test_value_at_origin(self):
        rep = PickRepresentation(0.0, 1.0, AtomicMeasure.dirac(0.0, math.pi))
        f = pick_constant_element(_pick_psi, rep)
        assert abs(f(0.0) - (1.0 - _pick_psi(0.0))) <= 1e-15

    def test_zero_c_rejected(self):
        rep = PickRepresentation(0.0, 0.0, AtomicMeasure.dirac(0.0, math.pi))
        with pytest.raises(ValueError):
            pick_constant_element(_pick_psi, rep)


class TestNevanlinnaSplit:
    def test_pure_linear_part_constant_kernel(self):
        rep = PickRepresentation(0.5, 2.0, AtomicMeasure(()))
        report = nevanlinna_split_check(rep, halfplane_pairs(5, 1))
        assert report.max_abs_err <= 1e-15

    def test_hand_checked_single_atom_diagonal(self):
        rep = PickRepresentation(0.0, 0.0, AtomicMeasure.dirac(0.0, math.pi))
        report = nevanlinna_split_check(rep, [(1j, 1j)])
        assert report.max_abs_err == 0.0

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_seeded_pairs_exact(self, seed):
        rep = PickRepresentation(1.0, 2.0, AtomicMeasure.dirac(1.0, math.pi))
        report = nevanlinna_split_check(rep, halfplane_pairs(10, seed))
        assert report.passed and report.max_abs_err <= 1e-12


class TestChordalExpKernel:
    def test_degenerate_interval(self):
        flow = ChordalFlowSpec.basic_slit(0.5, 0.5)
        rule = gauss_legendre(8, 0.5, 0.5)
        report = chordal_exp_kernel_check(flow, rule, [(1j, 2j)])
        assert report.max_abs_err <= 1e-15

    def test_hand_checked_anchor_sqrt3(self):
        report = chordal_exp_kernel_check(SLIT, RULE, [(1j, 1j)], tol=1e-10)
        assert report.max_abs_err <= 1e-10
        b_end = chordal_transition(SLIT, 1.0, 1j)
        rhs = (b_end - b_end.conjugate()) / (1j - (1j).conjugate())
        assert abs(rhs - math.sqrt(3)) <= 1e-15

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_seeded_pairs(self, seed):
        pairs = halfplane_pairs(10, seed, rect=HALFPLANE_RECT_SAFE)
        report = chordal_exp_kernel_check(SLIT, RULE, pairs)
        assert report.passed and report.max_abs_err <= 1e-8


class TestChordalExpElement:
    def test_degenerate_interval(self):
        flow = ChordalFlowSpec.basic_slit(0.5, 0.5)
        rule = gauss_legendre(8, 0.5, 0.5)
        report, _ = chordal_exp_element_check(flow, rule, [1j])
        assert report.max_abs_err <= 1e-15

    def test_closed_form_at_i(self):
        report, _ = chordal_exp_element_check(SLIT, RULE, [1j])
        value = cmath.exp(sum(w / chordal_transition(SLIT, t, 1j) for t, w in zip(RULE.nodes, RULE.weights)))
        assert abs(value - cmath.exp(1j - 1j * math.sqrt(3))) <= 1e-12
        assert report.max_abs_err <= 1e-12

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_seeded_points_and_membership(self, seed):
        pts = halfplane_points(20, seed, rect=HALFPLANE_RECT_SAFE)
        report, membership = chordal_exp_element_check(SLIT, RULE, pts, seed=seed)
        assert report.passed and report.max_abs_err <= 1e-8
        assert membership.verdict == BOUNDED


class TestHerglotzMixture:
    def test_single_atom_exact(self):
        report = herglotz_mixture_check(AtomicMeasure.dirac(-1.0), disk_pairs(5, 1))
        assert report.max_abs_err <= 1e-15

    def test_symmetric_mixture_diagonal_value(self):
        from loewnerkit import HerglotzSpaceKernel, herglotz_eval

        mu = AtomicMeasure(((1.0, 0.5), (-1.0, 0.5)))
        report = herglotz_mixture_check(mu, [(0.0, 0.0)])
        assert report.max_abs_err == 0.0
        diagonal = HerglotzSpaceKernel(lambda z: herglotz_eval(mu, z))(0.0, 0.0)
        assert diagonal == 2.0

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_three_atom_mixture_exact(self, seed):
        mu = AtomicMeasure(((1.0, 0.5), (-1.0, 0.3), (cmath.exp(0.7j), 0.2)))
        report = herglotz_mixture_check(mu, disk_pairs(10, seed))
        assert report.passed and report.max_abs_err <= 1e-12

    def test_non_probability_rejected(self):
        with pytest.raises(ValueError):
            herglotz_mixture_check(AtomicMeasure.dirac(-1.0, 0.5), [(0.1, 0.2)])
