"""Brute-force Schmidt spectra of explicit constituent states.

Quasiboson creation operators are expanded as A^dag = sum Phi[mu, nu]
a^dag_mu b^dag_nu and applied to the constituent vacuum one at a time.
Constituent configurations are occupation tuples; fermionic signs follow
a Jordan-Wigner ordering with all a-modes before all b-modes. The a|b
coefficient matrix is then split into connected blocks and each block is
diagonalized by SVD. Nothing here uses the closed forms in ``states``.
"""
from collections import defaultdict
from dataclasses import dataclass
from math import comb, exp, log, sqrt

import numpy as np

from .deformed import DeformationParams, Statistics, structure_function
from .errors import CapacityError, ConvergenceError, DomainError, ValidationError

ENUMERATION_LIMIT = 10**6
DROP_BELOW = 1e-15


@dataclass(frozen=True, eq=False)
class PhiMatrix:
    """Coefficient matrix of one quasiboson in constituent-mode space."""

    entries: np.ndarray
    scale: float

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=complex)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValidationError(f"Phi must be square, got shape {e.shape}")
        object.__setattr__(self, "entries", e)

    @property
    def m(self):
        return self.entries.shape[0]

    def norm2(self):
        return float(np.sum(np.abs(self.entries) ** 2))


@dataclass(frozen=True)
class ConstituentConfig:
    """Occupations of the a- (or b-) constituent modes."""

    occupation: tuple
    statistics: Statistics

    def __post_init__(self):
        if any(k < 0 for k in self.occupation):
            raise ValidationError("occupations must be nonnegative")
        if self.statistics == Statistics.FERMIONIC and any(k > 1 for k in self.occupation):
            raise ValidationError("fermionic modes hold at most one constituent")


@dataclass(frozen=True, eq=False)
class SchmidtSpectrum:
    """Schmidt weights in descending order, each with a multiplicity.

    Weights whose total block mass is below 1e-15 are dropped.
    """

    weights: tuple
    multiplicities: tuple = None

    def __post_init__(self):
        w = [float(x) for x in self.weights]
        mult = [1] * len(w) if self.multiplicities is None else [int(k) for k in self.multiplicities]
        if len(mult) != len(w):
            raise ValidationError("weights and multiplicities differ in length")
        pairs = [(x, k) for x, k in zip(w, mult) if k > 0 and x * k >= DROP_BELOW]
        pairs.sort(key=lambda t: -t[0])
        total = sum(x * k for x, k in pairs)
        if abs(total - 1) > 1e-12:
            raise ValidationError(f"Schmidt weights sum to {total!r}, not 1")
        object.__setattr__(self, "weights", tuple(x for x, _ in pairs))
        object.__setattr__(self, "multiplicities", tuple(k for _, k in pairs))

    def expanded(self):
        """Flat weight list (only sensible for modest ranks)."""
        return [x for x, k in zip(self.weights, self.multiplicities) for _ in range(k)]


def spectrum_entropy(s):
    return 0.0 - sum(k * w * log(w) for w, k in zip(s.weights, s.multiplicities))


def spectrum_purity(s):
    return sum(k * w * w for w, k in zip(s.weights, s.multiplicities))


def schmidt_rank(s):
    return sum(s.multiplicities)


def schmidt_number(s):
    return 1 / spectrum_purity(s)


# -- Phi matrices -------------------------------------------------------------


def random_unitary(m, rng):
    """Haar-random m x m unitary (QR of a complex Ginibre matrix)."""
    z = (rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))) / sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def canonical_phi(m, seed=None):
    """sqrt(f/2) times the identity, or a random local-unitary rotation of it."""
    if int(m) != m or m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    scale = sqrt(1 / m)
    core = np.eye(m, dtype=complex)
    if seed is not None:
        rng = np.random.default_rng(seed)
        u1 = random_unitary(m, rng)
        u2 = random_unitary(m, rng)
        core = u1 @ core @ u2.conj().T
    return PhiMatrix(scale * core, scale)


def schmidt_single(phi):
    """Schmidt spectrum of one quasiboson: squared singular values of Phi."""
    n2 = phi.norm2()
    if abs(n2 - 1) > 1e-10:
        raise ValidationError(f"Phi is not normalized: sum |Phi|^2 = {n2!r}")
    sv = np.linalg.svd(phi.entries, compute_uv=False)
    w = sv**2
    return SchmidtSpectrum(tuple(w / w.sum()))


# -- explicit constituent states ----------------------------------------------


def _create(occ, mode, fermionic, preceding):
    """Apply one creation operator; returns (new occupation, factor) or None."""
    k = occ[mode]
    if fermionic:
        if k:
            return None
        sign = -1 if (preceding + sum(occ[:mode])) % 2 else 1
        return occ[:mode] + (1,) + occ[mode + 1 :], sign
    return occ[:mode] + (k + 1,) + occ[mode + 1 :], sqrt(k + 1)


def apply_quasiboson(state, phi, offset, fermionic):
    """A^dag |state> for a quasiboson living on modes offset..offset+m-1."""
    nz = [(mu, nu, c) for (mu, nu), c in np.ndenumerate(phi.entries) if c != 0]
    out = defaultdict(complex)
    for (a_occ, b_occ), amp in state.items():
        n_a = sum(a_occ)
        for mu, nu, c in nz:
            # a^dag_mu b^dag_nu: b acts first, its sign sees every a constituent
            rb = _create(b_occ, offset + nu, fermionic, n_a)
            if rb is None:
                continue
            ra = _create(a_occ, offset + mu, fermionic, 0)
            if ra is None:
                continue
            out[(ra[0], rb[0])] += amp * c * ra[1] * rb[1]
    return {k: v for k, v in out.items() if v != 0}


def build_state(terms, phis, statistics):
    """Constituent-space expansion of sum_n amp(n) prod_j (A_j^dag)^n_j |0>.

    ``phis`` gives one PhiMatrix per quasiboson mode; mode j acts on the
    j-th block of constituent modes. Keys of the result are
    ``(a_occupation, b_occupation)`` tuples.
    """
    fermionic = Statistics.coerce(statistics) == Statistics.FERMIONIC
    offsets = []
    total_modes = 0
    for phi in phis:
        offsets.append(total_modes)
        total_modes += phi.m
    vacuum = ((0,) * total_modes, (0,) * total_modes)
    out = defaultdict(complex)
    for occ, amp in terms.items():
        state = {vacuum: complex(amp)}
        for j, n_j in enumerate(occ):
            for _ in range(n_j):
                state = apply_quasiboson(state, phis[j], offsets[j], fermionic)
        for key, v in state.items():
            out[key] += v
    return {k: v for k, v in out.items() if v != 0}


def state_norm2(state):
    return sum(abs(v) ** 2 for v in state.values())


def _components(state):
    """Group coefficients into blocks connected through shared a or b configs."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in state:
        ka, kb = ("a", a), ("b", b)
        parent.setdefault(ka, ka)
        parent.setdefault(kb, kb)
        ra, rb = find(ka), find(kb)
        if ra != rb:
            parent[ra] = rb
    blocks = defaultdict(list)
    for (a, b), v in state.items():
        blocks[find(("a", a))].append((a, b, v))
    return blocks.values()


def spectrum_of_state(state):
    """Schmidt spectrum of an explicit a|b state, normalized numerically."""
    norm2 = state_norm2(state)
    if norm2 == 0:
        raise ValidationError("state vanishes identically")
    weights = []
    for block in _components(state):
        rows = {a: i for i, a in enumerate(dict.fromkeys(a for a, _, _ in block))}
        cols = {b: i for i, b in enumerate(dict.fromkeys(b for _, b, _ in block))}
        mat = np.zeros((len(rows), len(cols)), dtype=complex)
        for a, b, v in block:
            mat[rows[a], cols[b]] = v
        sv = np.linalg.svd(mat, compute_uv=False)
        weights.extend((sv**2 / norm2).tolist())
    return SchmidtSpectrum(tuple(weights))


def _config_count(n, m, fermionic):
    return comb(m, n) if fermionic else comb(m + n - 1, n)


def _guard(terms, ms, fermionic):
    size = 0
    for occ in terms:
        prod = 1
        for n_j, m in zip(occ, ms):
            prod *= _config_count(n_j, m, fermionic)
        size += prod
    if size > ENUMERATION_LIMIT:
        raise CapacityError(f"enumeration needs {size} configurations (limit {ENUMERATION_LIMIT})")


def fock_spectrum(m, n, statistics, phi=None):
    """Spectrum of (A^dag)^n |0> found by explicit enumeration."""
    stats = Statistics.coerce(statistics)
    fermionic = stats == Statistics.FERMIONIC
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    if fermionic and n > m:
        raise DomainError(f"n={n} > m={m}: no room for {n} fermionic pairs")
    phi = canonical_phi(m) if phi is None else phi
    _guard([(n,)], [phi.m], fermionic)
    return spectrum_of_state(build_state({(int(n),): 1.0}, [phi], stats))


def superposition_spectrum(fs, phis=None):
    """Exact spectrum of a FockSuperposition by enumeration."""
    p = fs.params
    phis = [canonical_phi(p.m) for _ in range(fs.mode_count)] if phis is None else list(phis)
    fermionic = p.eps == 1
    _guard(fs.terms, [phi.m for phi in phis], fermionic)
    state = build_state(fs.terms, phis, p.epsilon)
    norm2 = state_norm2(state)
    if abs(norm2 - 1) > 1e-8:
        raise ValidationError(f"state norm**2 = {norm2!r}; superposition is not normalized")
    return spectrum_of_state(state)


def coherent_spectrum(m, amp, truncation_n=400, tail_tol=1e-12):
    """Block spectrum of the two-boson coherent state from its direct series.

    Block n carries probability p_n = amp**(2n) / phi(n)! (normalized) spread
    evenly over C(m+n-1, n) configurations.
    """
    if amp < 0:
        raise DomainError(f"amp must be >= 0, got {amp}")
    if amp == 0:
        return SchmidtSpectrum((1.0,))
    p = DeformationParams(m, Statistics.BOSONIC)
    log_a2 = 2 * log(amp)
    log_w = [0.0]
    for n in range(1, truncation_n + 1):
        log_w.append(log_w[-1] + log_a2 - log(structure_function(n, p)))
    top = max(log_w)
    w = [exp(x - top) for x in log_w]
    total = sum(w)
    ratio = amp * amp / structure_function(truncation_n + 1, p)
    if ratio >= 1 or w[-1] * ratio / (1 - ratio) / total >= tail_tol:
        raise ConvergenceError(f"coherent series not converged at n={truncation_n}", estimate=total)
    mult = [comb(m + n - 1, n) for n in range(truncation_n + 1)]
    return SchmidtSpectrum(tuple(x / total / k for x, k in zip(w, mult)), tuple(mult))
