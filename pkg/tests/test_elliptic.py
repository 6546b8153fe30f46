"""Unit tests for the elliptic-function and quadrature engine.

mpmath serves as the high-precision oracle for the Jacobi functions and the
complete integral; the quadrature oracle is a fine fixed-step Simpson rule.
"""

import math

import mpmath
import numpy as np
import pytest

from casorati.elliptic import (
    QuadratureError,
    complete_K,
    integrate,
    jacobi_elliptic,
    jacobi_sd,
)

mpmath.mp.dps = 40

HALF = 1.0 / math.sqrt(2.0)


def mp_triple(u, k):
    m = mpmath.mpf(k) ** 2
    return (float(mpmath.ellipfun("sn", u, m=m)),
            float(mpmath.ellipfun("cn", u, m=m)),
            float(mpmath.ellipfun("dn", u, m=m)))


def fixed_simpson(f, a, b, panels=20000):
    xs = np.linspace(a, b, 2 * panels + 1)
    ys = np.array([f(x) for x in xs])
    h = (b - a) / (2 * panels)
    return h / 3.0 * (ys[0] + ys[-1] + 4.0 * ys[1:-1:2].sum() + 2.0 * ys[2:-1:2].sum())


class TestJacobiElliptic:
    def test_origin(self):
        for k in (0.0, 0.3, HALF, 0.95):
            t = jacobi_elliptic(0.0, k)
            assert t.sn == 0.0
            assert t.cn == 1.0
            assert t.dn == 1.0

    def test_degenerate_modulus_is_circular(self):
        for u in np.linspace(-15.0, 15.0, 61):
            t = jacobi_elliptic(u, 0.0)
            assert t.sn == pytest.approx(math.sin(u), abs=1e-12)
            assert t.cn == pytest.approx(math.cos(u), abs=1e-12)
            assert t.dn == pytest.approx(1.0, abs=1e-12)

    def test_quarter_period(self):
        for k in (0.2, HALF, 0.9):
            K = complete_K(k)
            t = jacobi_elliptic(K, k)
            assert t.sn == pytest.approx(1.0, abs=1e-12)
            assert t.dn == pytest.approx(math.sqrt(1.0 - k * k), abs=1e-12)

    def test_against_mpmath(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            u = float(rng.uniform(-40.0, 40.0))
            k = float(rng.uniform(0.0, 0.97))
            t = jacobi_elliptic(u, k)
            sn, cn, dn = mp_triple(u, k)
            assert t.sn == pytest.approx(sn, abs=2e-13)
            assert t.cn == pytest.approx(cn, abs=2e-13)
            assert t.dn == pytest.approx(dn, abs=2e-13)

    def test_pythagorean_identities(self):
        rng = np.random.default_rng(5)
        for _ in range(500):
            u = float(rng.uniform(-30.0, 30.0))
            k = float(rng.uniform(0.0, 0.999))
            t = jacobi_elliptic(u, k)
            assert t.sn ** 2 + t.cn ** 2 == pytest.approx(1.0, abs=1e-12)
            assert (k * t.sn) ** 2 + t.dn ** 2 == pytest.approx(1.0, abs=1e-12)

    def test_modulus_validation(self):
        with pytest.raises(ValueError):
            jacobi_elliptic(1.0, 1.0)
        with pytest.raises(ValueError):
            jacobi_elliptic(1.0, -0.1)


class TestJacobiSd:
    def test_zero(self):
        assert jacobi_sd(0.0, HALF) == 0.0

    def test_quarter_period_value(self):
        assert jacobi_sd(complete_K(HALF), HALF) == pytest.approx(
            math.sqrt(2.0), abs=1e-12)

    def test_degenerate_modulus(self):
        for u in (0.1, 1.0, -2.5):
            assert jacobi_sd(u, 0.0) == pytest.approx(math.sin(u), abs=1e-13)


class TestCompleteK:
    def test_circular_limit(self):
        assert complete_K(0.0) == pytest.approx(math.pi / 2.0, abs=1e-15)

    def test_agm_oracle(self):
        for k in (0.5, HALF, 0.1, 0.9, 0.99):
            oracle = float(mpmath.ellipk(mpmath.mpf(k) ** 2))
            assert complete_K(k) == pytest.approx(oracle, abs=1e-12)


class TestIntegrate:
    def test_constant(self):
        res = integrate(lambda x: 1.0, 0.0, 1.0, tol=1e-10)
        assert res.value == pytest.approx(1.0, abs=1e-13)

    def test_empty_interval(self):
        res = integrate(lambda x: math.exp(x), 0.7, 0.7)
        assert res.value == 0.0
        assert res.evaluations == 0

    def test_sd_squared_against_fixed_step(self):
        f = lambda s: jacobi_sd(s, HALF) ** 2
        res = integrate(f, 0.0, 1.0, tol=1e-11)
        oracle = fixed_simpson(f, 0.0, 1.0)
        assert res.value == pytest.approx(oracle, abs=1e-9)
        assert res.error_estimate <= 1e-10

    def test_deterministic(self):
        f = lambda s: math.cos(3.0 * s) ** 2
        a = integrate(f, 0.0, 2.0, tol=1e-10)
        b = integrate(f, 0.0, 2.0, tol=1e-10)
        assert a.value == b.value
        assert a.evaluations == b.evaluations

    def test_nonfinite_integrand_raises(self):
        with pytest.raises(QuadratureError):
            integrate(lambda x: math.inf if x == 0.0 else 1.0 / x,
                      -1.0, 1.0, tol=1e-12)

    def test_depth_limit_raises(self):
        with pytest.raises(QuadratureError):
            integrate(lambda x: math.sqrt(abs(x)), -1.0, 1.0,
                      tol=1e-13, max_depth=3)

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            integrate(lambda x: x, 0.0, 1.0, tol=0.0)
