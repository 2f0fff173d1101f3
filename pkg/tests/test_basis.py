import math

import numpy as np
import pytest
from scipy import integrate, special

from diracmorse.basis import (
    BasisSpec,
    QuadratureRule,
    gauss_laguerre,
    ho_norms,
    ho_radial,
    laguerre_table,
)


class TestBasisSpec:
    def test_defaults(self):
        spec = BasisSpec()
        assert spec.N_max == 200
        assert spec.theta == pytest.approx(math.radians(70.0))

    @pytest.mark.parametrize("N_max", [-2, 3, 201])
    def test_odd_or_negative_cutoff_rejected(self, N_max):
        with pytest.raises(ValueError):
            BasisSpec(N_max=N_max)

    def test_b0_positive(self):
        with pytest.raises(ValueError):
            BasisSpec(b0=0.0)

    @pytest.mark.parametrize("theta", [-0.1, math.pi / 2, 2.0])
    def test_theta_range(self, theta):
        with pytest.raises(ValueError):
            BasisSpec(theta=theta)

    def test_block_sizes(self):
        spec = BasisSpec(N_max=200)
        assert spec.n_max(0) == 101
        assert spec.n_max(1) == 100
        assert spec.n_tilde_max(1) == 101
        assert spec.n_tilde_max(2) == 100

    def test_small_block_one_shell_higher(self):
        # kinetic balance: highest small-component shell = N_max + 1
        spec = BasisSpec(N_max=20)
        for lt in range(4):
            n = spec.n_tilde_max(lt)
            assert 2 * (n - 1) + lt == 21 - (21 - lt) % 2

    def test_effective_quad_order(self):
        assert BasisSpec().effective_quad_order(101) == 141
        assert BasisSpec(quad_order=250).effective_quad_order(101) == 250


class TestGaussLaguerre:
    def test_moments_exact(self):
        # rule with weight x^a e^{-x} integrates x^k exactly up to 2n-1
        a = 1.5
        rule = gauss_laguerre(6, a)
        for k in range(12):
            exact = special.gamma(a + k + 1)
            got = rule.integrate(rule.nodes**k)
            assert got.real == pytest.approx(exact, rel=1e-12)

    def test_invalid_order(self):
        with pytest.raises(ValueError):
            gauss_laguerre(0, 0.5)

    def test_invalid_exponent(self):
        with pytest.raises(ValueError):
            gauss_laguerre(5, -1.0)

    def test_rule_validation(self):
        with pytest.raises(ValueError):
            QuadratureRule(nodes=np.array([2.0, 1.0]),
                           weights=np.array([1.0, 1.0]), exponent=0.5)
        with pytest.raises(ValueError):
            QuadratureRule(nodes=np.array([1.0, 2.0]),
                           weights=np.array([1.0, -1.0]), exponent=0.5)


class TestLaguerreTable:
    def test_against_scipy(self):
        x = np.linspace(0.0, 40.0, 25)
        table = laguerre_table(30, 1.5, x)
        for k in [0, 1, 2, 7, 15, 29]:
            ref = special.eval_genlaguerre(k, 1.5, x)
            scale = np.maximum(1.0, np.abs(ref))
            assert np.max(np.abs(table[k] - ref) / scale) < 1e-11


class TestRadialFunctions:
    @pytest.mark.parametrize("n,l", [(1, 0), (3, 0), (1, 2), (5, 1), (20, 3)])
    def test_unit_norm(self, n, l):
        b0 = 0.8
        val, _ = integrate.quad(
            lambda r: (r * ho_radial(n, l, b0, r)) ** 2,
            0.0, 40.0 * b0, limit=200)
        assert val == pytest.approx(1.0, abs=1e-10)

    def test_orthogonality(self):
        b0 = 1.3
        val, _ = integrate.quad(
            lambda r: r * r * ho_radial(2, 1, b0, r) * ho_radial(4, 1, b0, r),
            0.0, 40.0 * b0, limit=200)
        assert abs(val) < 1e-10

    def test_ground_state_closed_form(self):
        # R_10(r) = 2 pi^{-1/4} b0^{-3/2} ... : N_10^2 = 2/Gamma(3/2)
        b0 = 0.9
        r = np.linspace(0.01, 3.0, 7)
        norm = math.sqrt(2.0 / special.gamma(1.5))
        expected = norm * b0 ** (-1.5) * np.exp(-((r / b0) ** 2) / 2.0)
        got = ho_radial(1, 0, b0, r)
        assert np.max(np.abs(got - expected)) < 1e-13

    def test_norm_constants_log_gamma_stable(self):
        vals = ho_norms(150, 2)
        assert np.all(np.isfinite(vals))
        assert np.all(vals > 0)
        n = 150
        direct = math.exp(0.5 * (math.log(2.0) + special.gammaln(n)
                                 - special.gammaln(n + 2.5)))
        assert vals[-1] == pytest.approx(direct, rel=1e-12)

    def test_scalar_and_array_agree(self):
        assert ho_radial(3, 1, 0.7, 1.1) == pytest.approx(
            ho_radial(3, 1, 0.7, np.array([1.1]))[0])

    @pytest.mark.parametrize("kw", [dict(n=0, l=0, b0=1.0, r=1.0),
                                    dict(n=1, l=-1, b0=1.0, r=1.0),
                                    dict(n=1, l=0, b0=0.0, r=1.0),
                                    dict(n=1, l=0, b0=1.0, r=-1.0)])
    def test_argument_validation(self, kw):
        with pytest.raises(ValueError):
            ho_radial(kw["n"], kw["l"], kw["b0"], kw["r"])
