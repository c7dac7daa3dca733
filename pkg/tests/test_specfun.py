from math import cos, exp, log, pi, sin, sqrt

import mpmath
import pytest
from scipy import special
from hypothesis import given
from hypothesis import strategies as st

from quasiboson import ConvergenceError, DomainError
from quasiboson import _pykernels as codes
from quasiboson.specfun import (
    QuadratureConfig,
    adaptive_quad,
    assoc_legendre,
    bessel_i,
    gegenbauer,
    log_bessel_i,
    log_binomial,
    log_gamma,
    quad_builtin,
)

mpmath.mp.dps = 40


@given(st.floats(min_value=1e-3, max_value=1e4))
def test_log_gamma_matches_mpmath(x):
    assert log_gamma(x) == pytest.approx(float(mpmath.loggamma(x)), rel=1e-13, abs=1e-13)


def test_log_gamma_rejects_nonpositive():
    with pytest.raises(DomainError):
        log_gamma(0.0)


@given(st.integers(0, 300), st.integers(0, 300))
def test_log_binomial_integer_matches_mpmath(a, b):
    upper, lower = max(a, b), min(a, b)
    ref = float(mpmath.log(mpmath.binomial(upper, lower)))
    assert log_binomial(upper, lower) == pytest.approx(ref, rel=1e-12, abs=1e-12)


@given(st.floats(0, 50), st.floats(0, 20))
def test_log_binomial_real_matches_mpmath(upper, lower):
    if upper - lower + 1 <= 0.01:
        return
    ref = float(mpmath.log(mpmath.binomial(upper, lower)))
    assert log_binomial(upper, lower) == pytest.approx(ref, rel=1e-11, abs=1e-11)


def test_log_binomial_pole():
    with pytest.raises(DomainError):
        log_binomial(2, 3.5)
    with pytest.raises(DomainError):
        log_binomial(2, -1)


@pytest.mark.parametrize("nu", [0, 1, 2, 5, 9, 20])
@pytest.mark.parametrize("z", [1e-6, 0.3, 2.0, 10.0, 80.0, 700.0, 5000.0])
def test_log_bessel_i_matches_mpmath(nu, z):
    ref = float(mpmath.log(mpmath.besseli(nu, z)))
    assert log_bessel_i(nu, z) == pytest.approx(ref, rel=1e-12, abs=1e-13)


def test_bessel_i_at_zero():
    assert bessel_i(0, 0.0) == 1.0
    assert bessel_i(3, 0.0) == 0.0
    with pytest.raises(DomainError):
        log_bessel_i(1, -1.0)
    with pytest.raises(DomainError):
        log_bessel_i(1.5, 1.0)


@given(st.integers(1, 30), st.floats(0.01, 50))
def test_bessel_recurrence(nu, z):
    # I_{nu-1} - I_{nu+1} = (2 nu / z) I_nu
    lhs = bessel_i(nu - 1, z) - bessel_i(nu + 1, z)
    assert lhs == pytest.approx(2 * nu / z * bessel_i(nu, z), rel=1e-10)


@pytest.mark.parametrize("l", range(7))
def test_assoc_legendre_matches_mpmath(l):
    for m in range(l + 1):
        for t in (-0.9, -0.3, 0.0, 0.41, 0.99):
            ref = special.lpmv(m, l, t)
            assert assoc_legendre(l, m, t) == pytest.approx(ref, rel=1e-12, abs=1e-12)


def test_legendre_low_orders():
    t = 0.3
    assert assoc_legendre(1, 0, t) == pytest.approx(t)
    assert assoc_legendre(1, 1, t) == pytest.approx(-sqrt(1 - t * t))
    assert assoc_legendre(2, 0, t) == pytest.approx((3 * t * t - 1) / 2)


@given(st.integers(1, 6), st.integers(0, 8), st.floats(-1, 1))
def test_gegenbauer_matches_mpmath(lam, k, x):
    ref = special.eval_gegenbauer(k, lam, x)
    assert gegenbauer(lam, k, x) == pytest.approx(ref, rel=1e-11, abs=1e-11)


def test_gegenbauer_chebyshev_u():
    # C^1_k(cos t) = sin((k+1) t) / sin t
    t = 0.7
    for k in range(8):
        assert gegenbauer(1, k, cos(t)) == pytest.approx(sin((k + 1) * t) / sin(t))


def test_domain_checks():
    with pytest.raises(DomainError):
        assoc_legendre(2, 3, 0.1)
    with pytest.raises(DomainError):
        assoc_legendre(2, 1, 1.5)
    with pytest.raises(DomainError):
        gegenbauer(0, 2, 0.1)


@pytest.mark.parametrize("degree", range(0, 32))
def test_kronrod_rule_is_exact_for_polynomials(degree):
    # 21-point Kronrod extension of 10-point Gauss: exact through degree 31
    value, err = codes.gk21(lambda x: x**degree, -1.0, 1.0)
    exact = 0.0 if degree % 2 else 2 / (degree + 1)
    assert value == pytest.approx(exact, abs=1e-14)


def test_adaptive_quad_smooth_and_singular():
    assert adaptive_quad(exp, 0, 1)[0] == pytest.approx(exp(1) - 1, rel=1e-13)
    assert adaptive_quad(lambda x: 1 / sqrt(x), 0, 1)[0] == pytest.approx(2, rel=1e-9)
    assert adaptive_quad(lambda x: log(x), 0, 1)[0] == pytest.approx(-1, rel=1e-9)
    assert adaptive_quad(exp, 1, 0)[0] == pytest.approx(1 - exp(1), rel=1e-13)
    assert adaptive_quad(exp, 1, 1) == (0.0, 0.0)


def test_half_pi_identity():
    # integral over [-1, 1] of sqrt(1 - x^2) equals pi / 2
    assert adaptive_quad(lambda x: sqrt(1 - x * x), -1, 1)[0] == pytest.approx(pi / 2, rel=1e-10)


def test_convergence_error_carries_estimate():
    cfg = QuadratureConfig(1e-15, 1e-15, 3)
    with pytest.raises(ConvergenceError) as info:
        adaptive_quad(lambda x: 1 / sqrt(x), 0, 1, cfg)
    assert info.value.estimate == pytest.approx(2, rel=0.1)


def test_quadrature_config_validation():
    with pytest.raises(DomainError):
        QuadratureConfig(0, 1e-10)
    with pytest.raises(DomainError):
        QuadratureConfig(1e-10, 1e-10, 0)


def test_quad_builtin_legendre_norm():
    value, _ = quad_builtin(codes.LEGENDRE_NORM, 3, 2, -1.0, 1.0)
    assert value == pytest.approx(2 * 120 / (7 * 1))
