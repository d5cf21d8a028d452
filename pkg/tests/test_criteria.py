import numpy as np
import pytest

from harmap import DegenerateDenominator, HarmonicMap, NonUnimodularParameter, PowerSeries, catalog, example1_map, geometric_section
from harmap.criteria import (
    DcpProbe,
    SamplingConfig,
    circle_points,
    collision_search,
    convex_criterion,
    convex_criterion_values,
    convolution_margin,
    convolution_margin_min,
    dcp_bound_a,
    dcp_bound_b,
    dcp_probe_pass,
    dcp_test_series,
    default_direction_probes,
    gh0_margin,
    ph0_margin,
    royster_ziegler_min,
    rz_bound_diag,
    s22_convexity_gap,
    s22_convexity_gap_direct,
)


class TestClassMargins:
    def test_pzhalf_margin(self):
        f = catalog("pzhalf", 4)
        assert ph0_margin(f, 0.0, 0.6j) == pytest.approx(0.4, abs=1e-14)

    def test_identity_margin(self):
        f = HarmonicMap(PowerSeries([0, 1]), PowerSeries.zeros(1))
        for z in (0.1, -0.5j, 0.8 * np.exp(1j)):
            assert ph0_margin(f, 0.0, z) == pytest.approx(1.0, abs=1e-14)

    def test_f0_margin_at_far_left(self):
        # evaluate with enough stored terms for the alternating tail at r=0.9
        f = catalog("f0", 256)
        margin = ph0_margin(f, 0.0, -0.9)
        want = 1.0 / 1.9**3 - 0.9 / 1.9**3
        assert margin == pytest.approx(want, abs=1e-7)
        assert margin > 0

    def test_gh0_at_origin(self):
        f = example1_map(1.0, 0.25, 4)
        assert gh0_margin(f, 0.25, 0.0) == pytest.approx(0.75, abs=1e-14)

    def test_gh0_example1_boundary_family(self):
        # |a| = 1 members have margin (1-beta)(1-|z|) up to phase
        f = example1_map(1.0, 0.0, 4)
        zs = circle_points(0.5, 64)
        vals = gh0_margin(f, 0.0, zs)
        assert np.min(vals) == pytest.approx(0.5, abs=1e-12)

    def test_gh0_violated_when_a_large(self):
        f = example1_map(1.2, 0.0, 4)
        vals = gh0_margin(f, 0.0, circle_points(0.99, 512))
        assert np.min(vals) < 0

    def test_identity_gh0(self):
        f = HarmonicMap(PowerSeries([0, 1]), PowerSeries.zeros(1))
        zs = np.array([0.3, -0.4j, 0.0])
        assert np.allclose(gh0_margin(f, 0.0, zs), 1.0, atol=1e-14)

    def test_margins_continuous_monitor(self):
        # adjacent-sample slope stays under 1e3 on moderate circles
        dtheta = 2 * np.pi / 4096
        worst = 0.0
        for name in ("f0", "koebe_harmonic", "sixgon", "example1", "pzhalf"):
            f = catalog(name, 64)
            for r in (0.3, 0.5, 0.6):
                zs = circle_points(r, 4096)
                for vals in (ph0_margin(f, 0.0, zs), gh0_margin(f, 0.0, zs)):
                    jumps = np.abs(np.diff(np.append(vals, vals[0])))
                    worst = max(worst, float(jumps.max()) / dtheta)
        assert worst < 1e3


class TestConvexCriterion:
    def test_s33_witness_value(self, f0):
        z0 = 0.25 * np.exp(2j * np.pi / 3)
        val = convex_criterion(f0.section(3, 3), z0)
        assert val == pytest.approx(-47.0 / 97.0, abs=1e-9)

    def test_near_origin_limit(self, f0):
        val = convex_criterion(f0, 1e-6 * np.exp(0.3j))
        assert abs(val - 1.0) < 1e-4

    def test_origin_limit_rate_all_catalog(self):
        for name in ("f0", "koebe_harmonic", "sixgon", "example1", "pzhalf"):
            f = catalog(name, 64)
            for radius in (1e-3, 1e-4):
                zs = radius * np.exp(2j * np.pi * np.arange(32) / 32)
                vals = convex_criterion_values(f, zs)
                assert np.max(np.abs(vals - 1.0)) <= 10 * radius

    def test_w_form_cross_check(self, f0):
        # same functional from the Moebius-ratio representation
        s22 = f0.section(2, 2)
        zs = 0.2 * np.exp(2j * np.pi * np.arange(64) / 64)
        w = (3 * zs**2 - 3 * np.conj(zs) ** 2) / (2 * zs + 9 * zs**2 - np.conj(zs) ** 2)
        want = ((1 + w) / (1 - w)).real
        got = convex_criterion_values(s22, zs)
        assert np.max(np.abs(got - want)) < 1e-10

    def test_degenerate_denominator(self, f0):
        s22 = f0.section(2, 2)
        with pytest.raises(DegenerateDenominator):
            convex_criterion(s22, -0.25)  # Df vanishes at the sharp point

    def test_degenerate_marked_nan_in_arrays(self, f0):
        s22 = f0.section(2, 2)
        vals = convex_criterion_values(s22, np.array([-0.25, 0.1]))
        assert np.isnan(vals[0]) and np.isfinite(vals[1])


class TestS22Gap:
    def test_point_value(self):
        # -0.16 * (1.64 + 1.1)
        assert s22_convexity_gap(0.2, np.pi / 3) == pytest.approx(-0.4384, abs=1e-12)

    def test_sharp_radius_zero(self):
        assert s22_convexity_gap(0.25, np.pi) == pytest.approx(0.0, abs=1e-15)

    def test_zero_at_origin(self):
        assert s22_convexity_gap(0.0, 1.234) == 0.0

    def test_matches_direct_form(self):
        r = 0.3 * np.arange(1, 101) / 100
        t = 2 * np.pi * np.arange(100) / 100
        rr, tt = np.meshgrid(r, t)
        direct = s22_convexity_gap_direct(rr * np.exp(1j * tt))
        assert np.max(np.abs(s22_convexity_gap(rr, tt) - direct)) < 1e-12

    def test_theta_pi_closed_form(self):
        r = 0.99 * np.arange(1, 51) / 50
        want = -4 * r**2 * (4 * r - 1) ** 2
        assert np.max(np.abs(s22_convexity_gap(r, np.pi) - want)) < 1e-12


class TestRoysterZiegler:
    def test_identity_series_diag_probe(self, cfg):
        phi = PowerSeries([0, 1]).pad(4)
        rep = royster_ziegler_min(phi, DcpProbe(0.0, np.pi / 2, np.pi / 2), 0.5, cfg)
        # Re(1 - z^2) minimized where cos(2 theta) = 1
        assert rep.min_value == pytest.approx(0.75, abs=1e-12)
        assert rep.argmin == pytest.approx(0.5 + 0j, abs=1e-12)
        assert rep.passed

    def test_degree3_diag_bound(self, cfg):
        phi = dcp_test_series(geometric_section(3), 0.0)
        rep = royster_ziegler_min(phi, DcpProbe(0.0, np.pi / 2, np.pi / 2), 0.201254, cfg)
        assert rep.min_value >= 0.608489

    def test_degree4_axis_bound(self, cfg):
        t = 2.0 / 19.0
        phi = dcp_test_series(geometric_section(4), t)
        rep = royster_ziegler_min(phi, DcpProbe(t, 0.0, 0.0), 0.25, cfg)
        assert rep.min_value >= dcp_bound_a(4, t) - 1e-9
        assert rep.passed

    def test_grid_refinement_stable(self, cfg):
        phi = dcp_test_series(geometric_section(3), 0.105712)
        fine = SamplingConfig(n_theta=2 * cfg.n_theta)
        a = royster_ziegler_min(phi, DcpProbe(0.0, np.pi / 2, np.pi / 2), 0.201254, cfg)
        b = royster_ziegler_min(phi, DcpProbe(0.0, np.pi / 2, np.pi / 2), 0.201254, fine)
        assert abs(a.min_value - b.min_value) <= 1e-3

    def test_probe_validation(self):
        with pytest.raises(ValueError):
            DcpProbe(0.0, -0.1, 0.5)
        with pytest.raises(ValueError):
            DcpProbe(0.0, 0.0, 4.0)


class TestDcp:
    def test_test_series_t_zero(self):
        g = geometric_section(3)
        assert np.array_equal(dcp_test_series(g, 0.0).coeffs, g.coeffs)

    def test_test_series_formula(self):
        out = dcp_test_series(PowerSeries([0, 1, 1]), 1.0)
        assert np.allclose(out.coeffs, [0, 1 + 1j, 1 + 2j])

    def test_test_series_derivative_matches_rational_form(self):
        # phi' for the degree-3 section against its rational expression
        t = 2.0 / 19.0
        z = 0.1
        phi = dcp_test_series(geometric_section(3), t)
        got = phi.derivative().eval(z)
        want = (1 - 4 * z**3 + 3 * z**4) / (1 - z) ** 2 + 1j * t * (
            1 - 16 * z**3 + 9 * z**4 + 2 * (z + z**2 + z**3)
        ) / (1 - z) ** 2
        assert abs(got - want) < 1e-12

    def test_probe_passes_for_small_sections(self, cfg_fast):
        for t in (-1.0, -2.0 / 19.0, 0.0, 2.0 / 19.0, 1.0):
            ok, witness = dcp_probe_pass(geometric_section(2), t, 0.24, cfg_fast)
            assert ok and witness is not None

    def test_case1_witness_is_axis_probe(self, cfg_fast):
        ok, witness = dcp_probe_pass(geometric_section(5), 0.5, 0.25, cfg_fast)
        assert ok
        assert witness == (0.0, 0.0)

    def test_default_probe_list_shape(self):
        probes = default_direction_probes()
        assert probes[0] == (0.0, 0.0)
        assert probes[1] == (np.pi, np.pi)
        assert probes[2] == (np.pi / 2, np.pi / 2)
        assert len(probes) == 3 + 32 * 17

    def test_bound_a_values(self):
        assert dcp_bound_a(4, 2.0 / 19.0) == pytest.approx(0.0, abs=1e-15)
        # closed form 3(19t - 2)/4^4
        for t in (0.2, 0.4, 1.0):
            assert dcp_bound_a(4, t) == pytest.approx(3 * (19 * t - 2) / 4**4, abs=1e-14)

    def test_bound_a_monotone(self):
        assert dcp_bound_a(5, 0.2) >= dcp_bound_a(4, 0.2)

    def test_bound_b_value(self):
        t = 2.0 / 19.0
        want = (359.0 / 10.0 - 5033.0 * t / 36.0) / 64.0
        assert dcp_bound_b(4, t) == pytest.approx(want, abs=1e-13)
        assert dcp_bound_b(4, t) > 0

    def test_diag_bound_constants(self):
        # the degree-3 bound specializes to 0.608489 - 1.60093|t|
        assert rz_bound_diag(3, 0.0, 0.201254) == pytest.approx(0.608489, abs=5e-6)
        slope = rz_bound_diag(3, 0.0, 0.201254) - rz_bound_diag(3, 1.0, 0.201254)
        assert slope == pytest.approx(1.60093, abs=5e-5)


class TestConvolutionMargin:
    def test_identity_first_factor(self):
        ident = HarmonicMap(PowerSeries([0, 1]).pad(8), PowerSeries.zeros(8))
        f2 = example1_map(1.0, 0.5, 8)
        for eps in (1.0, -1.0, 1j):
            assert convolution_margin(ident, f2, eps, 0.5 + 0.3j, 0.0) == pytest.approx(1.0, abs=1e-13)

    def test_swap_symmetry(self, cfg_fast):
        f1 = catalog("pzhalf", 8)
        f2 = example1_map(1.0, 0.5, 8)
        zs = circle_points(0.7, 32)
        for eps in (1.0, 1j):
            a = convolution_margin(f1, f2, eps, zs, 0.0)
            b = convolution_margin(f2, f1, eps, zs, 0.0)
            assert np.array_equal(a, b)

    def test_rejects_non_unimodular_eps(self, f0):
        with pytest.raises(NonUnimodularParameter):
            convolution_margin(f0, f0, 0.5, 0.1, 0.0)

    def test_pzhalf_g_half_pair_positive(self, cfg):
        # close-to-convexity margin for the half-coefficient pair with gamma = 0
        f1 = catalog("pzhalf", 8)
        h2 = np.zeros(9, dtype=complex)
        h2[1], h2[2] = 1.0, 0.25
        f2 = HarmonicMap(PowerSeries(h2), PowerSeries.zeros(8))
        assert np.min(gh0_margin(f2, 0.5, circle_points(0.99, 256))) > 0
        margin, _ = convolution_margin_min(f1, f2, 0.0, cfg, n_theta=256)
        assert margin > 0

    def test_negative_gamma_pair(self, cfg):
        # gamma = -1 margin stays positive for the pzhalf/example1 pair;
        # the gamma = 0 value is recorded but carries no guarantee
        f1 = catalog("pzhalf", 8)
        f2 = example1_map(1.0, 0.0, 8)
        m_neg, _ = convolution_margin_min(f1, f2, -1.0, cfg, n_theta=128)
        m_zero, _ = convolution_margin_min(f1, f2, 0.0, cfg, n_theta=128)
        assert m_neg > 0
        assert m_zero == pytest.approx(m_neg - 1.0, abs=1e-12)


class TestCollisionSearch:
    def test_finds_fold_collision(self, cfg):
        f = example1_map(0.8, 0.0, 4)
        pair = collision_search(f, cfg, 0.95)
        assert pair is not None
        z1, z2 = pair
        assert abs(z1 - z2) >= 1e-6
        assert abs(f.eval(z1) - f.eval(z2)) <= 1e-10

    def test_analytic_pair_validates(self):
        f = example1_map(0.8, 0.0, 4)
        assert abs(f.eval(0.625 + 0.2j) - f.eval(0.625 - 0.2j)) <= 1e-10

    def test_univalent_map_yields_none(self, cfg):
        f = example1_map(0.4, 0.0, 4)
        assert collision_search(f, cfg, 0.95) is None

    def test_identity_yields_none(self, cfg):
        f = HarmonicMap(PowerSeries([0, 1]).pad(4), PowerSeries.zeros(4))
        assert collision_search(f, cfg, 0.95) is None
