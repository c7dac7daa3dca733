import warnings
from math import acos, cos, log, pi, sin, sqrt

import pytest
from scipy import integrate

from quasiboson import DomainError
from quasiboson.hydrogen import (
    EnergyRy,
    HydrogenState,
    delta_S,
    entropy_hydrogen,
    entropy_hydrogen_direct,
    entropy_hydrogen_s,
    g_function,
    gegenbauer_weight_integral,
    gegenbauer_weight_quad,
    legendre_norm_integral,
    legendre_norm_quad,
    momentum_wavefunction,
)

pytestmark = pytest.mark.filterwarnings("ignore:entropy")


def test_state_validation():
    with pytest.raises(DomainError):
        HydrogenState(2, 2)
    with pytest.raises(DomainError):
        HydrogenState(3, 1, 2)
    with pytest.raises(DomainError):
        HydrogenState(1, volume_ratio=0)
    with pytest.raises(DomainError):
        EnergyRy(0.0)
    assert EnergyRy(-0.25).principal == pytest.approx(2)


@pytest.mark.parametrize("n", range(1, 7))
def test_weight_integral(n):
    for l in range(n):
        value, _ = gegenbauer_weight_quad(n, l)
        assert value == pytest.approx(gegenbauer_weight_integral(n, l), abs=1e-10)


@pytest.mark.parametrize("l", range(7))
def test_legendre_norm(l):
    for m in range(l + 1):
        assert legendre_norm_quad(l, m)[0] == pytest.approx(legendre_norm_integral(l, m), rel=1e-12)


def test_g_function_ground_state():
    assert g_function(1, 0, 0.2) == pytest.approx(0.8**4)


@pytest.mark.parametrize("state", [HydrogenState(1), HydrogenState(2, 1, 0), HydrogenState(2, 1, 1), HydrogenState(3, 2, 1)])
def test_momentum_normalization_and_peak(state):
    def density(t, p):
        return 2 * pi * p * p * abs(momentum_wavefunction(state, p, acos(t), 0.0)) ** 2

    total, _ = integrate.dblquad(density, 0, float("inf"), -1, 1, epsabs=1e-10)
    assert total == pytest.approx(1.0, abs=1e-6)


def test_ground_state_peaks_at_zero():
    vals = [abs(momentum_wavefunction(HydrogenState(1), p, 0.0, 0.0)) for p in (0.0, 0.1, 0.5, 1.0, 3.0)]
    assert vals == sorted(vals, reverse=True)
    with pytest.raises(DomainError):
        momentum_wavefunction(HydrogenState(1), -1.0, 0, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_general_formula_matches_fast_path(n):
    assert entropy_hydrogen(HydrogenState(n)) == pytest.approx(entropy_hydrogen_s(n), abs=1e-10)


@pytest.mark.parametrize("state", [HydrogenState(2, 1, 0), HydrogenState(3, 1, 1), HydrogenState(3, 2, 2)])
def test_general_formula_matches_direct_quadrature(state):
    assert entropy_hydrogen(state) == pytest.approx(entropy_hydrogen_direct(state), abs=1e-8)


def test_volume_term_is_additive():
    s1 = entropy_hydrogen(HydrogenState(2, 1, 0, 10.0))
    s2 = entropy_hydrogen(HydrogenState(2, 1, 0, 1000.0))
    assert s2 - s1 == pytest.approx(log(100), abs=1e-12)


def test_delta_s_consistent_with_volume_split():
    for n in (1, 2, 3):
        assert delta_S(-1 / n**2) == pytest.approx(entropy_hydrogen_s(n, 1.0), abs=1e-12)


def _delta_s_reference(e):
    """Same continued formula, evaluated with scipy and explicit breakpoints."""
    nu = sqrt(-1 / e)

    def g(a):
        s = sin(nu * a) ** 2
        if s == 0:
            return 0.0
        return (1 - cos(a)) * s * log((1 - cos(a)) ** 4 * s / sin(a) ** 2)

    zeros = [k * pi / nu for k in range(1, int(nu) + 1) if k * pi / nu < pi]
    value = integrate.quad(g, 0, pi, points=zeros or None, limit=500, epsabs=1e-12, epsrel=1e-12)[0]
    return -log(4 * pi * nu**3) - 2 / pi * value


@pytest.mark.parametrize("e", [-0.9, -0.5, -0.22, -0.13, -0.07, -0.01])
def test_delta_s_between_integer_levels(e):
    assert delta_S(e) == pytest.approx(_delta_s_reference(e), abs=1e-8)


def test_delta_s_decreases_over_integer_levels():
    values = [delta_S(-1 / n**2) for n in range(1, 8)]
    assert values == sorted(values, reverse=True)


def test_delta_s_continuity():
    base = delta_S(-0.25)
    assert abs(delta_S(-0.25 + 1e-9) - base) < 1e-6


def test_small_volume_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        entropy_hydrogen(HydrogenState(1, volume_ratio=1.0))
    assert any("too small" in str(w.message) for w in caught)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert entropy_hydrogen(HydrogenState(1, volume_ratio=1e4)) > 0


def test_m_q_dependence_reported():
    # l=1 depends on m_q; for l=2, m_q=1 and m_q=2 give the same entropy
    # (confirmed by the direct momentum-space quadrature)
    s = {(l, m): entropy_hydrogen(HydrogenState(3, l, m, 1e4)) for l in (1, 2) for m in range(l + 1)}
    assert s[(1, 0)] != pytest.approx(s[(1, 1)], abs=1e-3)
    assert s[(2, 1)] == pytest.approx(s[(2, 2)], abs=1e-10)
    assert s[(2, 2)] == pytest.approx(entropy_hydrogen_direct(HydrogenState(3, 2, 2, 1e4)), abs=1e-8)
