"""Quadratically deformed oscillator: structure function and mode energies.

Energies are dimensionless, E / (hbar * omega). Occupation numbers may be
real so that energy sweeps give continuous curves.
"""
from dataclasses import dataclass
from enum import IntEnum
from math import isclose, log, sqrt

from .errors import DomainError


class Statistics(IntEnum):
    """Constituent statistics; the value is the sign ``eps`` in phi(n)."""

    FERMIONIC = 1
    BOSONIC = -1

    @classmethod
    def coerce(cls, value):
        if isinstance(value, str):
            text = value.strip().lower()
            if text in ("fermionic", "fermion", "f"):
                return cls.FERMIONIC
            if text in ("bosonic", "boson", "b"):
                return cls.BOSONIC
            value = int(text)
        try:
            return cls(int(value))
        except ValueError:
            raise DomainError(f"eps must be +1 or -1, got {value!r}") from None


@dataclass(frozen=True)
class DeformationParams:
    """Deformation level ``m`` (source of truth) and constituent statistics.

    The deformation parameter is ``f = 2/m``.
    """

    m: int
    epsilon: Statistics = Statistics.FERMIONIC

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise DomainError(f"m must be a positive integer, got {self.m!r}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "epsilon", Statistics.coerce(self.epsilon))

    @classmethod
    def from_f(cls, f, epsilon=Statistics.FERMIONIC):
        """Build from ``f``; only values 2/m with integer m are admissible."""
        if not f > 0:
            raise DomainError(f"f must be positive, got {f}")
        m = round(2 / f)
        if m < 1 or not isclose(2 / m, f, rel_tol=1e-12):
            raise DomainError(f"f={f} is not of the form 2/m with integer m >= 1")
        return cls(m, epsilon)

    @property
    def f(self):
        return 2 / self.m

    @property
    def eps(self):
        return int(self.epsilon)


@dataclass(frozen=True)
class ModeDispersion:
    """Linear dispersion omega_k = omega0 + k * delta_omega over occupied modes."""

    omega0: float
    delta_omega: float = 0.0

    def __post_init__(self):
        if not self.omega0 > 0:
            raise DomainError(f"omega0 must be > 0, got {self.omega0}")

    def frequency(self, k):
        w = self.omega0 + k * self.delta_omega
        if not w > 0:
            raise DomainError(f"mode {k} has non-positive frequency {w}")
        return w


def structure_function(n, p):
    """phi(n) = (1 + eps f/2) n - eps (f/2) n**2."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    half_f = 1 / p.m
    return (1 + p.eps * half_f) * n - p.eps * half_f * n * n


def phi_factorial_log(n, p):
    """ln prod_{k=1..n} phi(k); zero for n = 0."""
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    if p.eps == 1 and n > p.m:
        raise DomainError(f"deformed Fock space exhausted: n={n} > m={p.m}")
    total = 0.0
    for k in range(1, int(n) + 1):
        total += log(structure_function(k, p))
    return total


def mode_energy(n, p):
    """Energy of one mode holding ``n`` quasibosons, in units of hbar*omega."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if p.eps == 1 and n > p.m:
        raise DomainError(f"n={n} exceeds m={p.m} for fermionic constituents")
    return n + 0.5 - p.eps * n * n / p.m


def energy_bounds(p):
    """Admissible (lower, upper) mode energy; upper is None when unbounded."""
    if p.eps == 1:
        return 0.5, (p.m + 2) / 4
    return 0.5, None


def invert_mode_energy(e, p):
    """Occupation numbers giving mode energy ``e``.

    Fermionic constituents give two roots ``(n_minus, n_plus)`` with
    ``n_minus <= m/2 <= n_plus``; bosonic ones give ``(n, None)``.
    """
    lo, hi = energy_bounds(p)
    if not (e >= lo and (hi is None or e <= hi)):
        upper = "inf" if hi is None else repr(hi)
        raise DomainError(f"mode energy {e} outside admissible interval [{lo}, {upper}]")
    x = e - 0.5
    f = p.f
    disc = 1 - 2 * p.eps * f * x
    if disc < 0:
        # only reachable through rounding at the fermionic maximum
        disc = 0.0
    root = sqrt(disc)
    n_small = 2 * x / (1 + root)
    if p.eps == -1:
        return n_small, None
    return n_small, min(p.m * (1 + root) / 2, float(p.m))

