"""Entanglement between electron and proton in a hydrogen atom.

The atom is treated as a two-fermion composite whose Schmidt coefficients
are the momentum-space wavefunction. Units are atomic (hbar = a0 = 1,
Z = 1), energies are in Rydberg, and the confining volume enters only as
the ratio V / a0**3.
"""
import cmath
import warnings
from dataclasses import dataclass
from math import acos, cos, exp, factorial, lgamma, log, pi, sqrt

from . import _pykernels as codes
from .errors import DomainError
from .specfun import DEFAULT_QUAD, assoc_legendre, gegenbauer, quad_builtin


@dataclass(frozen=True)
class HydrogenState:
    """Bound state (n, l, m_q) in a box of volume ``volume_ratio`` * a0**3."""

    n: int
    l: int = 0
    m_q: int = 0
    volume_ratio: float = 1.0

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.l <= self.n - 1 or not 0 <= self.m_q <= self.l:
            raise DomainError(f"need n >= 1, 0 <= l < n, 0 <= m_q <= l; got {self.n, self.l, self.m_q}")
        if not self.volume_ratio > 0:
            raise DomainError(f"volume_ratio must be > 0, got {self.volume_ratio}")


@dataclass(frozen=True)
class EnergyRy:
    """Bound-state energy in units of the Rydberg."""

    e: float

    def __post_init__(self):
        if not self.e < 0:
            raise DomainError(f"bound-state energy must be negative, got {self.e}")

    @property
    def principal(self):
        """Effective principal quantum number sqrt(-Ry/E)."""
        return sqrt(-1 / self.e)


def g_function(n, l, x):
    """G_nl(x) = (1 - x**2)**l (1 - x)**4 (C^{l+1}_{n-l-1}(x))**2."""
    if not 0 <= l <= n - 1:
        raise DomainError(f"need 0 <= l <= n-1, got n={n}, l={l}")
    c = gegenbauer(l + 1, n - l - 1, x)
    return ((1 - x) * (1 + x)) ** l * (1 - x) ** 4 * c * c


def _log_radial_factor(n, l):
    """ln[n (n-l-1)! / (n+l)!]."""
    return log(n) + lgamma(n - l) - lgamma(n + l + 1)


def gegenbauer_weight_integral(n, l):
    """Closed form of the integral of sqrt(1-x^2)/(1-x)^3 * G_nl over [-1, 1]."""
    if not 0 <= l <= n - 1:
        raise DomainError(f"need 0 <= l <= n-1, got n={n}, l={l}")
    return pi * 2.0 ** (-1 - 2 * l) / (exp(_log_radial_factor(n, l)) * factorial(l) ** 2)


def gegenbauer_weight_quad(n, l, cfg=DEFAULT_QUAD):
    """Same integral by adaptive quadrature; returns (value, error)."""
    if not 0 <= l <= n - 1:
        raise DomainError(f"need 0 <= l <= n-1, got n={n}, l={l}")
    return quad_builtin(codes.HYD_X_WEIGHT, n, l, -1.0, 1.0, cfg)


def legendre_norm_integral(l, m):
    """Closed form of the integral of (P_l^m)**2 over [-1, 1]."""
    return 2 * factorial(l + m) / ((2 * l + 1) * factorial(l - m))


def legendre_norm_quad(l, m, cfg=DEFAULT_QUAD):
    return quad_builtin(codes.LEGENDRE_NORM, l, m, -1.0, 1.0, cfg)


def _angular_coefficient(l, m):
    """(2l+1)(l-m)! / (2 (l+m)!), the normalization of (P_l^m)**2."""
    return (2 * l + 1) * factorial(l - m) / (2 * factorial(l + m))


def entropy_hydrogen(state, cfg=DEFAULT_QUAD):
    """Entanglement entropy of hydrogen state (n, l, m_q) in volume V.

    Sum of a volume-dependent log constant, an angular Legendre entropy
    and a radial Gegenbauer entropy integral.
    """
    n, l, m = state.n, state.l, state.m_q
    ang = _angular_coefficient(l, m)
    log_radial = _log_radial_factor(n, l)
    log_const = (
        log(2 * ang) + log(4 * pi) + 2 * l * log(2) + 2 * lgamma(l + 1) + 3 * log(n) - log(state.volume_ratio) + log_radial
    )
    angular = 0.0
    if l > 0:
        angular, _ = quad_builtin(codes.LEGENDRE_ENTROPY, l, m, -1.0, 1.0, cfg)
    radial, _ = quad_builtin(codes.HYD_X_ENTROPY, n, l, -1.0, 1.0, cfg)
    radial_coef = 4.0**l * factorial(l) ** 2 / (pi / 2) * exp(log_radial)
    s = -log_const - ang * angular - radial_coef * radial
    if s <= 0:
        warnings.warn(f"entropy {s:.4g} <= 0: volume_ratio {state.volume_ratio} is too small", stacklevel=2)
    return s


def _alpha_integral(nu, cfg):
    value, _ = quad_builtin(codes.HYD_ALPHA, nu, 0.0, 0.0, pi, cfg)
    return value


def entropy_hydrogen_s(n, volume_ratio=1.0, cfg=DEFAULT_QUAD):
    """Entropy of the l = m = 0 state via the angle substitution x = cos(alpha)."""
    HydrogenState(n, 0, 0, volume_ratio)
    return log(volume_ratio) - log(4 * pi * n**3) - 2 / pi * _alpha_integral(float(n), cfg)


def delta_S(e, cfg=DEFAULT_QUAD):
    """Volume-independent entropy Delta S at energy E/Ry (continuous in E)."""
    energy = e if isinstance(e, EnergyRy) else EnergyRy(float(e))
    nu = energy.principal
    return -log(4 * pi * nu**3) - 2 / pi * _alpha_integral(nu, cfg)


def momentum_wavefunction(state, p_mag, theta_p, phi_p):
    """phi_{n l m}(p) in atomic units (p in hbar/a0)."""
    n, l, m = state.n, state.l, state.m_q
    if p_mag < 0:
        raise DomainError(f"momentum magnitude must be >= 0, got {p_mag}")
    xi = n * p_mag
    x = (xi * xi - 1) / (xi * xi + 1)
    amplitude = (
        sqrt(_angular_coefficient(l, m))
        * assoc_legendre(l, m, cos(theta_p))
        * pi
        * 2.0 ** (2 * l + 4)
        * factorial(l)
        / (2 * pi / n) ** 1.5
        * sqrt(exp(_log_radial_factor(n, l)))
        * xi**l
        / (xi * xi + 1) ** (l + 2)
        * gegenbauer(l + 1, n - l - 1, x)
    )
    return cmath.exp(1j * m * phi_p) / sqrt(2 * pi) * amplitude


def entropy_hydrogen_direct(state, epsabs=1e-11, epsrel=1e-10):
    """Reference entropy by straight quadrature over momentum space.

    Integrates -rho ln((2 pi)^3 rho / V) with rho = |phi(p)|**2 over
    p in [0, inf) and cos(theta) in [-1, 1] using scipy's QUADPACK, with
    rho normalized numerically. Independent of the x-substitution used by
    :func:`entropy_hydrogen`; slow, intended for validation.
    """
    from scipy import integrate

    log_box = 3 * log(2 * pi) - log(state.volume_ratio)

    def rho(p, t):
        theta = acos(t)
        return abs(momentum_wavefunction(state, p, theta, 0.0)) ** 2

    def plogp(r):
        return r * (log(r) + log_box) if r > 0 else 0.0

    opts = dict(epsabs=epsabs, epsrel=epsrel, limit=500)
    if state.l == 0:
        norm = integrate.quad(lambda p: 4 * pi * p * p * rho(p, 1.0), 0, float("inf"), **opts)[0]
        body = integrate.quad(lambda p: 4 * pi * p * p * plogp(rho(p, 1.0) / norm), 0, float("inf"), **opts)[0]
        return -body
    norm = integrate.dblquad(lambda t, p: 2 * pi * p * p * rho(p, t), 0, float("inf"), -1, 1, epsabs=epsabs, epsrel=epsrel)[0]
    body = integrate.dblquad(
        lambda t, p: 2 * pi * p * p * plogp(rho(p, t) / norm), 0, float("inf"), -1, 1, epsabs=epsabs, epsrel=epsrel
    )[0]
    return -body
