"""Closed-form entanglement entropy and purity of quasiboson states.

Four families are covered: a single quasiboson, single-mode Fock states,
one quasiboson in each of several modes, and the single-mode coherent
state. Entropies are in nats. Each family is available both as a
function of its own parameter (occupation, amplitude) and of energy.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, exp, lgamma, log, sqrt

from .deformed import DeformationParams, Statistics, invert_mode_energy, phi_factorial_log
from .errors import ConvergenceError, DivergenceError, DomainError, ValidationError
from .specfun import log_bessel_i, log_binomial

THREE_HALVES = Fraction(3, 2)


class Branch(Enum):
    MINUS = "minus"
    PLUS = "plus"
    SINGLE = "single"


@dataclass(frozen=True)
class CurvePoint:
    """One sample of an entropy/purity curve against energy."""

    e: float
    s: float
    p: float
    branch: Branch = Branch.SINGLE


# -- single quasiboson -------------------------------------------------------


def entropy_single(p):
    """Entropy of one quasiboson: ln m."""
    return log(p.m)


def purity_single(p):
    return 1 / p.m


def single_energy(p):
    """Energy of one quasiboson, 3/2 - eps/m (units of hbar*omega)."""
    return 1.5 - p.eps / p.m


def _single_gap(e, eps):
    eps = Statistics.coerce(eps)
    lo, hi = (0.5, 1.5) if eps == Statistics.FERMIONIC else (1.5, 2.5)
    if not lo <= e <= hi:
        raise DomainError(f"single-quasiboson energy {e} outside [{lo}, {hi}] for eps={int(eps)}")
    # Fraction input keeps the distance to 3/2 exact near the divergence.
    if isinstance(e, Fraction):
        gap = THREE_HALVES - e
    else:
        gap = 1.5 - float(e)
    return gap if eps == Statistics.FERMIONIC else -gap


def entropy_single_vs_energy(e, eps):
    """Single-quasiboson entropy as a function of e = E/(hbar*omega).

    Valid on [1/2, 3/2] for fermionic and [3/2, 5/2] for bosonic
    constituents; unbounded at e = 3/2. Pass a :class:`fractions.Fraction`
    to resolve energies very close to 3/2 exactly.
    """
    gap = _single_gap(e, eps)
    if gap == 0:
        raise DivergenceError("entropy diverges at E = 3/2 hbar*omega")
    return 0.0 - log(gap)


def purity_single_vs_energy(e, eps):
    """Single-quasiboson purity, linear in energy; tends to 0 at e = 3/2."""
    return float(_single_gap(e, eps))


# -- single-mode Fock states --------------------------------------------------


def _check_occupation(n, p):
    if int(n) != n or n < 0:
        raise DomainError(f"occupation must be a nonnegative integer, got {n}")
    if p.eps == 1 and n > p.m:
        raise DomainError(f"n={n} exceeds m={p.m}: deformed Fock space exhausted")
    return int(n)


def fock_multiplicity(n, p):
    """Number of constituent configurations carrying n quasibosons."""
    n = _check_occupation(n, p)
    return comb(p.m, n) if p.eps == 1 else comb(p.m + n - 1, n)


def _log_multiplicity(n, p):
    return log_binomial(p.m, n) if p.eps == 1 else log_binomial(p.m + n - 1, n)


def entropy_fock(n, p):
    """Entropy of the normalized Fock state with n quasibosons in one mode."""
    return _log_multiplicity(_check_occupation(n, p), p)


def purity_fock(n, p):
    return 1 / fock_multiplicity(n, p)


def entropy_fock_vs_energy(e, p):
    """Fock-state entropy at mode energy e, one entry per occupation branch.

    Fermionic constituents give ``[(MINUS, s), (PLUS, s)]``; bosonic ones a
    single ``(SINGLE, s)``. Occupations are real-valued here.
    """
    n_minus, n_plus = invert_mode_energy(e, p)
    if n_plus is None:
        return [(Branch.SINGLE, _log_multiplicity(n_minus, p))]
    return [(Branch.MINUS, _log_multiplicity(n_minus, p)), (Branch.PLUS, _log_multiplicity(n_plus, p))]


def purity_fock_vs_energy(e, p):
    return [(branch, exp(-s)) for branch, s in entropy_fock_vs_energy(e, p)]


# -- one quasiboson per mode --------------------------------------------------


def entropy_per_mode(n, p):
    """n occupied modes, one quasiboson each: n ln m."""
    return n * log(p.m)


def purity_per_mode(n, p):
    return float(p.m) ** (-n)


def _per_mode_scale(p):
    return (3 - p.eps * p.f) / 2


def per_mode_energy(n, disp, p):
    """Energy (in units of hbar) of n modes singly occupied, vacuum excluded."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return _per_mode_scale(p) * (disp.omega0 * n + 0.5 * disp.delta_omega * n * (n - 1))


def per_mode_occupation(energy, disp, p):
    """Invert :func:`per_mode_energy` for the root connected to n = 0."""
    if energy < 0:
        raise DomainError(f"energy must be >= 0, got {energy}")
    c = energy / _per_mode_scale(p)
    b = disp.omega0 - 0.5 * disp.delta_omega
    a = 0.5 * disp.delta_omega
    if a == 0:
        return c / disp.omega0
    disc = b * b + 4 * a * c
    if disc < 0:
        raise DomainError(f"energy {energy} is not reachable for this dispersion")
    root = sqrt(disc)
    if b + root > 0:
        return 2 * c / (b + root)
    return (root - b) / (2 * a)


def per_mode_entropy_vs_energy(energy, disp, p):
    return per_mode_occupation(energy, disp, p) * log(p.m)


def per_mode_purity_vs_energy(energy, disp, p):
    return purity_per_mode(per_mode_occupation(energy, disp, p), p)


# -- coherent state (two-boson combinatorics) ---------------------------------


@dataclass(frozen=True)
class CoherentParams:
    """Single-mode coherent state |amp, m> with series truncation controls."""

    amp: float
    m: int
    truncation_n: int = 400
    tail_tol: float = 1e-12

    def __post_init__(self):
        if not self.amp >= 0:
            raise DomainError(f"amp must be >= 0, got {self.amp}")
        if int(self.m) != self.m or self.m < 1:
            raise DomainError(f"m must be a positive integer, got {self.m}")
        if self.truncation_n < 1:
            raise DomainError("truncation_n must be >= 1")

    @property
    def z(self):
        return 2 * sqrt(self.m) * self.amp


def coherent_log_norm_sum(cp):
    """ln sum_n amp**(2n) / phi(n)!, via the Bessel closed form."""
    if cp.amp == 0:
        return 0.0
    m = cp.m
    return lgamma(m) + log_bessel_i(m - 1, cp.z) - (m - 1) * log(0.5 * cp.z)


def coherent_normalization(cp):
    """Normalization constant of the coherent state."""
    return exp(-0.5 * coherent_log_norm_sum(cp))


def coherent_energy(cp):
    """Mean energy E/(hbar*omega) of the coherent state."""
    if cp.amp == 0:
        return 0.5
    m, z, amp = cp.m, cp.z, cp.amp
    centre = log_bessel_i(m - 1, z)
    up = exp(log_bessel_i(m, z) - centre)
    down = exp(log_bessel_i(abs(m - 2), z) - centre)
    return amp * amp + 1 / (2 * m) + amp / sqrt(m) * (up + down) / 2


def coherent_block_weights(cp):
    """Probabilities p_n of finding n quasibosons, n = 0..truncation_n.

    Raises :class:`ConvergenceError` when the truncated weight misses more
    than ``tail_tol``.
    """
    if cp.amp == 0:
        return [1.0]
    m = cp.m
    log_sum = coherent_log_norm_sum(cp)
    log_x = log(cp.amp * cp.amp * m)
    weights = []
    total = 0.0
    for n in range(cp.truncation_n + 1):
        lp = -log_sum + n * log_x - 2 * lgamma(n + 1) - log_binomial(m + n - 1, n)
        w = exp(lp)
        weights.append(w)
        total += w
    if 1 - total > cp.tail_tol:
        raise ConvergenceError(
            f"coherent series truncated at n={cp.truncation_n} misses weight {1 - total:.3g}",
            estimate=total,
            error=1 - total,
        )
    return weights


def coherent_entropy(cp):
    """Entanglement entropy of the coherent state (nats)."""
    m = cp.m
    s = 0.0
    for n, w in enumerate(coherent_block_weights(cp)):
        if w > 0:
            s += w * (log_binomial(m + n - 1, n) - log(w))
    return s


def coherent_purity(cp):
    m = cp.m
    return sum(w * w * exp(-log_binomial(m + n - 1, n)) for n, w in enumerate(coherent_block_weights(cp)))


def coherent_curve(m, amp_grid, truncation_n=400, tail_tol=1e-12):
    """Parametric (energy, entropy, purity) samples over an amplitude grid."""
    grid = [float(a) for a in amp_grid]
    for i, a in enumerate(grid):
        if a < 0 or (i and a <= grid[i - 1]):
            raise DomainError("amp_grid must be nonnegative and strictly increasing")
    out = []
    for a in grid:
        cp = CoherentParams(a, m, truncation_n, tail_tol)
        out.append(CurvePoint(coherent_energy(cp), coherent_entropy(cp), coherent_purity(cp)))
    return out


# -- general multi-mode superpositions ----------------------------------------


@dataclass(frozen=True)
class FockSuperposition:
    """Superposition of products of quasiboson powers over D modes.

    ``terms`` maps occupation vectors to amplitudes of the unnormalized
    products (A_1^dag)^n_1 ... (A_D^dag)^n_D |0>, so normalization reads
    sum |amp|**2 prod phi(n_j)! = 1.
    """

    mode_count: int
    terms: dict
    params: DeformationParams
    norm_tol: float = field(default=1e-10, compare=False)

    def __post_init__(self):
        if self.mode_count < 1:
            raise ValidationError("mode_count must be >= 1")
        clean = {}
        for occ, amp in self.terms.items():
            occ = tuple(int(k) for k in occ)
            if len(occ) != self.mode_count or any(k < 0 for k in occ):
                raise ValidationError(f"bad occupation vector {occ} for {self.mode_count} modes")
            if self.params.eps == 1 and any(k > self.params.m for k in occ):
                raise ValidationError(f"occupation {occ} exceeds m={self.params.m}")
            clean[occ] = complex(amp)
        object.__setattr__(self, "terms", clean)
        norm = self.norm()
        if abs(norm - 1) > self.norm_tol:
            raise ValidationError(f"superposition not normalized: norm**2 = {norm!r}")

    def norm(self):
        p = self.params
        return sum(
            abs(a) ** 2 * exp(sum(phi_factorial_log(k, p) for k in occ)) for occ, a in self.terms.items()
        )

    @classmethod
    def fock(cls, n, p):
        """Normalized single-mode Fock state with n quasibosons."""
        return cls(1, {(n,): exp(-0.5 * phi_factorial_log(n, p))}, p)

    @classmethod
    def one_per_mode(cls, d, p):
        """D modes each holding one quasiboson."""
        return cls(d, {(1,) * d: 1.0}, p)

    @classmethod
    def equal_superposition(cls, occupations, p):
        """Equal-weight superposition of normalized single-mode Fock states."""
        c = 1 / sqrt(len(occupations))
        return cls(1, {(n,): c * exp(-0.5 * phi_factorial_log(n, p)) for n in occupations}, p)


def _general_terms(fs):
    """(log weight per Schmidt vector, multiplicity) for every nonzero term."""
    p = fs.params
    log_m = log(p.m)
    out = []
    for occ, amp in fs.terms.items():
        a2 = abs(amp) ** 2
        if a2 == 0:
            continue
        lw = log(a2) - sum(occ) * log_m + sum(2 * lgamma(k + 1) for k in occ)
        mult = 1
        for k in occ:
            mult *= fock_multiplicity(k, p)
        out.append((lw, mult))
    return out


def general_weight_total(fs):
    """Sum of Schmidt weights implied by the general formula; equals 1."""
    return sum(mult * exp(lw) for lw, mult in _general_terms(fs))


def entropy_general(fs):
    """Entropy of a multi-mode superposition of quasiboson products.

    Each occupation vector contributes a block of ``prod_j N(n_j)`` equal
    Schmidt weights, N(n) being the number of constituent configurations
    (subsets for fermions, multisets for bosons).
    """
    return 0.0 - sum(mult * exp(lw) * lw for lw, mult in _general_terms(fs))


def purity_general(fs):
    return sum(mult * exp(2 * lw) for lw, mult in _general_terms(fs))
