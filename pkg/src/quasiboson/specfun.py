"""Special functions and adaptive quadrature.

Everything here is a pure function of its arguments. Combinatorics are
done in log space so that occupation numbers in the thousands never
overflow.
"""
from dataclasses import dataclass
from math import exp, isfinite, lgamma

from . import _pykernels
from ._backend import kernels
from .errors import ConvergenceError, DomainError


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances for :func:`adaptive_quad`.

    Convergence means ``err <= max(abs_tol, rel_tol * |value|)``.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be > 0, got {self.abs_tol}")
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be > 0, got {self.rel_tol}")
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise DomainError(f"max_subdivisions must be a positive integer, got {self.max_subdivisions}")


DEFAULT_QUAD = QuadratureConfig()


def log_gamma(x):
    """ln Gamma(x) for real x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return lgamma(x)


def log_binomial(upper, lower):
    """ln of the generalized binomial Gamma(u+1) / (Gamma(l+1) Gamma(u-l+1)).

    Real arguments are allowed so that energy-inverted (non-integer)
    occupation numbers give smooth curves. All three gamma arguments must
    be positive; anything else hits a pole or a sign change.
    """
    if lower < 0:
        raise DomainError(f"log_binomial requires lower >= 0, got {lower}")
    if not (upper + 1 > 0 and upper - lower + 1 > 0):
        raise DomainError(f"log_binomial({upper}, {lower}) hits a gamma pole")
    return lgamma(upper + 1) - lgamma(lower + 1) - lgamma(upper - lower + 1)


def _check_unit_interval(name, value):
    if not -1.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [-1, 1], got {value}")


def assoc_legendre(l, m, t):
    """Associated Legendre function P_l^m(t), Condon-Shortley phase included."""
    if l < 0 or not 0 <= m <= l:
        raise DomainError(f"need 0 <= m <= l, got l={l}, m={m}")
    _check_unit_interval("t", t)
    return kernels.assoc_legendre(int(l), int(m), float(t))


def gegenbauer(lam, k, x):
    """Gegenbauer polynomial C_k^lam(x) by the three-term recurrence."""
    if lam < 1 or k < 0:
        raise DomainError(f"need lam >= 1 and k >= 0, got lam={lam}, k={k}")
    _check_unit_interval("x", x)
    return kernels.gegenbauer(float(lam), int(k), float(x))


def log_bessel_i(nu, z):
    """ln I_nu(z) for integer order nu >= 0 and z > 0."""
    if nu < 0 or int(nu) != nu:
        raise DomainError(f"order must be a nonnegative integer, got {nu}")
    if not z > 0:
        if z == 0:
            return 0.0 if nu == 0 else float("-inf")
        raise DomainError(f"bessel_i requires z >= 0, got {z}")
    return kernels.log_bessel_i(int(nu), float(z))


def bessel_i(nu, z):
    """Modified Bessel function of the first kind I_nu(z), integer nu >= 0."""
    if z == 0:
        if nu < 0 or int(nu) != nu:
            raise DomainError(f"order must be a nonnegative integer, got {nu}")
        return 1.0 if nu == 0 else 0.0
    return exp(log_bessel_i(nu, z))


def _finish(value, err, status, intervals, what):
    if status != _pykernels.OK:
        reason = "subdivision limit reached" if status == _pykernels.LIMIT_REACHED else "interval too small to bisect"
        raise ConvergenceError(
            f"{what}: {reason} after {intervals} intervals (estimate {value!r}, error {err:.3g})",
            estimate=value,
            error=err,
        )
    return value, err


def adaptive_quad(f, a, b, cfg=DEFAULT_QUAD):
    """Integrate ``f`` over [a, b] by adaptive 21-point Gauss-Kronrod.

    The rule never samples the endpoints, so integrable endpoint
    singularities are fine. Returns ``(value, err_estimate)``; raises
    :class:`ConvergenceError` (carrying the best estimate) when the
    subdivision budget runs out.
    """
    if not (isfinite(a) and isfinite(b)):
        raise DomainError("adaptive_quad needs finite limits")
    if a == b:
        return 0.0, 0.0
    if a > b:
        value, err = adaptive_quad(f, b, a, cfg)
        return -value, err
    value, err, status, n = _pykernels.adaptive_gk21(
        f, float(a), float(b), cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions
    )
    return _finish(value, err, status, n, "adaptive_quad")


def quad_builtin(code, p0, p1, a, b, cfg=DEFAULT_QUAD):
    """Adaptive quadrature of a built-in integrand on the active backend."""
    value, err, status, n = kernels.quad_named(
        code, float(p0), float(p1), float(a), float(b), cfg.abs_tol, cfg.rel_tol, int(cfg.max_subdivisions)
    )
    return _finish(value, err, status, n, "quadrature")
