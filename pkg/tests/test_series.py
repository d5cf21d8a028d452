import numpy as np
import pytest

from harmap import DivisorVanishesAtOrigin, PowerSeries, geometric_section, rational_expand


class TestEval:
    def test_zero_at_origin(self):
        assert PowerSeries([0, 1, 1]).eval(0.0) == 0

    def test_half_plane_value_closed_form(self, f0):
        # (2z - z^2)/(2(1-z)^2) at z = 1/4 equals 7/18; tail far below 1e-15
        assert abs(f0.h.eval(0.25) - 7.0 / 18.0) < 1e-15

    def test_cubic_section_value(self, f0):
        s3 = f0.h.truncate(3)
        assert s3.eval(0.25) == pytest.approx(0.375, abs=1e-15)

    def test_array_shape_matches(self):
        s = PowerSeries([1, 2, 3])
        zs = np.array([[0.1, 0.2], [0.3, 0.4j]])
        out = s.eval(zs)
        assert out.shape == zs.shape
        assert out[0, 0] == s.eval(0.1)


class TestDerivative:
    def test_small_example(self):
        d = PowerSeries([0, 1, 1]).derivative()
        assert np.array_equal(d.coeffs, np.array([1.0, 2.0], dtype=complex))

    def test_quadratic_section_derivative(self, f0):
        d = f0.h.truncate(2).derivative()
        assert np.allclose(d.coeffs, [1.0, 3.0])

    def test_finite_difference_oracle(self, f0):
        z = 0.1 + 0.2j
        h = 1e-5
        fd = (f0.h.eval(z + h) - f0.h.eval(z - h)) / (2 * h)
        assert abs(f0.h.derivative().eval(z) - fd) < 1e-8

    def test_finite_difference_sweep(self, f0, rng):
        dh = f0.h.derivative()
        for _ in range(20):
            z = 0.9 * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
            step = 1e-5
            fd = (f0.h.eval(z + step) - f0.h.eval(z - step)) / (2 * step)
            assert abs(dh.eval(z) - fd) <= 1e-7

    def test_degree_zero(self):
        d = PowerSeries([5.0]).derivative()
        assert d.degree == 0 and d.coeffs[0] == 0

    def test_antiderivative_roundtrip(self, rng):
        c = rng.normal(size=7) + 1j * rng.normal(size=7)
        s = PowerSeries(c)
        back = s.antiderivative().derivative()
        assert np.allclose(back.coeffs, s.coeffs, atol=1e-15)


class TestMul:
    def test_z_squared(self):
        a = PowerSeries([0, 1]).pad(2)
        b = PowerSeries([0, 1]).pad(2)
        assert np.array_equal(a.mul(b).coeffs, np.array([0, 0, 1], dtype=complex))

    def test_denominator_clears_half_plane(self, f0):
        den = PowerSeries([1, -2, 1]).pad(64)  # (1-z)^2
        prod = den.mul(f0.h)
        want = np.zeros(65, dtype=complex)
        want[1] = 1.0
        want[2] = -0.5
        assert np.max(np.abs(prod.coeffs - want)) < 1e-12

    def test_exactly_commutative(self, rng):
        for _ in range(25):
            a = PowerSeries(rng.normal(size=20) + 1j * rng.normal(size=20))
            b = PowerSeries(rng.normal(size=20) + 1j * rng.normal(size=20))
            assert np.array_equal(a.mul(b).coeffs, b.mul(a).coeffs)

    def test_bilinear(self, rng):
        a = PowerSeries(rng.normal(size=12))
        b = PowerSeries(rng.normal(size=12))
        c = PowerSeries(rng.normal(size=12))
        lhs = a.mul(b + c).coeffs
        rhs = (a.mul(b) + a.mul(c)).coeffs
        assert np.allclose(lhs, rhs, atol=1e-13)

    def test_truncates_to_shorter(self):
        a = PowerSeries([1, 1, 1, 1, 1])
        b = PowerSeries([1, 1])
        assert a.mul(b).degree == 1


class TestDiv:
    def test_geometric_series(self):
        q = PowerSeries([1]).pad(5).div(PowerSeries([1, -1]).pad(5))
        assert np.allclose(q.coeffs, np.ones(6), atol=1e-14)

    def test_half_plane_expansion(self):
        q = PowerSeries([0, 2, -1]).pad(6).div(PowerSeries([2, -4, 2]).pad(6))
        assert np.allclose(q.coeffs, [0, 1, 1.5, 2, 2.5, 3, 3.5], atol=1e-13)

    def test_roundtrip(self, rng):
        for _ in range(10):
            a = PowerSeries(rng.normal(size=16) + 1j * rng.normal(size=16))
            b = PowerSeries(np.concatenate([[1.5], rng.normal(size=15) * 0.3]))
            q = a.div(b)
            assert np.max(np.abs(q.mul(b).coeffs - a.coeffs)) < 1e-12

    def test_zero_constant_divisor_rejected(self):
        with pytest.raises(DivisorVanishesAtOrigin):
            PowerSeries([1, 1]).div(PowerSeries([0, 1]))


class TestRationalExpand:
    def test_koebe_coefficients(self):
        s = rational_expand([0, 1], [1, -2, 1], 5)
        assert np.allclose(s.coeffs, [0, 1, 2, 3, 4, 5], atol=1e-13)

    def test_half_plane_g_part(self):
        s = rational_expand([0, 0, -1], [2, -4, 2], 5)
        want = -(np.arange(6) - 1.0) / 2.0
        want[0] = 0.0
        assert np.allclose(s.coeffs, want, atol=1e-13)

    def test_geometric_section_identity(self):
        # (z - z^5)/(1 - z) is the four-term geometric section
        s = rational_expand([0, 1, 0, 0, 0, -1], [1, -1], 6)
        assert np.allclose(s.coeffs, [0, 1, 1, 1, 1, 0, 0], atol=1e-14)

    def test_product_recovers_numerator(self, rng):
        num = [0.0, 1.0, -0.5]
        den = [1.0, 0.3, -0.2]
        s = rational_expand(num, den, 20)
        prod = s.mul(PowerSeries(den).pad(20))
        want = np.zeros(21, dtype=complex)
        want[:3] = num
        assert np.max(np.abs(prod.coeffs - want)) < 1e-12

    def test_pole_at_origin_rejected(self):
        with pytest.raises(DivisorVanishesAtOrigin):
            rational_expand([1], [0, 1], 4)


class TestHadamard:
    def test_geometric_kernel_is_identity(self, f0):
        kernel = geometric_section(64)
        assert np.array_equal(f0.h.hadamard(kernel).coeffs, f0.h.coeffs)

    def test_coefficient_product(self, f0):
        from harmap import catalog

        sixgon = catalog("sixgon", 13)
        prod = f0.h.hadamard(sixgon.h)
        assert prod.coeffs[7] == pytest.approx(4.0 / 7.0, abs=1e-15)

    def test_annihilates_zero(self, f0):
        z = PowerSeries.zeros(64)
        assert np.all(f0.h.hadamard(z).coeffs == 0)

    def test_exactly_commutative(self, rng):
        a = PowerSeries(rng.normal(size=10) + 1j * rng.normal(size=10))
        b = PowerSeries(rng.normal(size=10) + 1j * rng.normal(size=10))
        assert np.array_equal(a.hadamard(b).coeffs, b.hadamard(a).coeffs)


class TestValidation:
    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            PowerSeries([0.0, np.nan])

    def test_rejects_inf(self):
        with pytest.raises(ValueError):
            PowerSeries([np.inf])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            PowerSeries([])

    def test_coeffs_immutable(self):
        s = PowerSeries([1, 2])
        with pytest.raises(ValueError):
            s.coeffs[0] = 5.0
