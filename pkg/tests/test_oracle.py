from math import log

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasiboson import CapacityError, DomainError, ValidationError
from quasiboson.deformed import DeformationParams
from quasiboson.oracle import (
    PhiMatrix,
    SchmidtSpectrum,
    apply_quasiboson,
    build_state,
    canonical_phi,
    coherent_spectrum,
    fock_spectrum,
    schmidt_number,
    schmidt_rank,
    schmidt_single,
    spectrum_entropy,
    spectrum_purity,
    state_norm2,
    superposition_spectrum,
)
from quasiboson.states import (
    CoherentParams,
    FockSuperposition,
    coherent_entropy,
    coherent_purity,
    entropy_general,
    purity_general,
)


def test_spectrum_validation_and_sorting():
    s = SchmidtSpectrum((0.25, 0.75))
    assert s.weights == (0.75, 0.25)
    assert schmidt_rank(s) == 2
    assert schmidt_number(SchmidtSpectrum((0.5, 0.5))) == pytest.approx(2)
    with pytest.raises(ValidationError):
        SchmidtSpectrum((0.5, 0.4))
    s = SchmidtSpectrum((0.25,), (4,))
    assert spectrum_entropy(s) == pytest.approx(log(4))
    assert s.expanded() == [0.25] * 4


def test_single_quasiboson_spectrum():
    s = schmidt_single(canonical_phi(5))
    assert schmidt_rank(s) == 5
    assert spectrum_entropy(s) == pytest.approx(log(5))
    with pytest.raises(ValidationError):
        schmidt_single(PhiMatrix(np.eye(2), 1.0))


def test_fermionic_pauli_exclusion():
    phi = canonical_phi(2)
    vac = {((0, 0), (0, 0)): 1.0}
    once = apply_quasiboson(vac, phi, 0, True)
    twice = apply_quasiboson(once, phi, 0, True)
    assert apply_quasiboson(twice, phi, 0, True) == {}
    # (A^dag)^2 |0> has norm^2 phi(1) phi(2) = 1 * (1 + 1 - 1) for m=2, eps=+1
    assert state_norm2(twice) == pytest.approx(1.0)


@pytest.mark.parametrize("m,n,eps", [(3, 2, 1), (3, 2, -1), (4, 3, -1), (2, 2, 1)])
def test_fock_norm_matches_phi_factorial(m, n, eps):
    from quasiboson.deformed import phi_factorial_log

    state = build_state({(n,): 1.0}, [canonical_phi(m)], eps)
    assert log(state_norm2(state)) == pytest.approx(phi_factorial_log(n, DeformationParams(m, eps)), abs=1e-12)


def test_known_fock_spectra():
    assert fock_spectrum(3, 2, 1).expanded() == pytest.approx([1 / 3] * 3)
    assert fock_spectrum(3, 2, -1).expanded() == pytest.approx([1 / 6] * 6)
    with pytest.raises(DomainError):
        fock_spectrum(2, 3, 1)


def test_enumeration_limit():
    with pytest.raises(CapacityError):
        fock_spectrum(40, 8, -1)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.sampled_from([1, -1]), st.lists(st.integers(0, 3), min_size=1, max_size=3, unique=True))
def test_general_formula_matches_oracle(m, eps, occ):
    p = DeformationParams(m, eps)
    if eps == 1 and max(occ) > m:
        return
    fs = FockSuperposition.equal_superposition(occ, p)
    spec = superposition_spectrum(fs)
    assert entropy_general(fs) == pytest.approx(spectrum_entropy(spec), abs=1e-10)
    assert purity_general(fs) == pytest.approx(spectrum_purity(spec), abs=1e-10)


@pytest.mark.parametrize("d,m,eps", [(2, 3, 1), (3, 2, 1), (2, 2, -1), (3, 3, -1)])
def test_one_per_mode_oracle(d, m, eps):
    p = DeformationParams(m, eps)
    spec = superposition_spectrum(FockSuperposition.one_per_mode(d, p))
    assert spectrum_entropy(spec) == pytest.approx(d * log(m), abs=1e-10)


def test_multimode_superposition_oracle():
    p = DeformationParams(3, -1)
    from math import exp, sqrt

    from quasiboson.deformed import phi_factorial_log

    c = 1 / sqrt(2)
    terms = {(2, 0): c * exp(-0.5 * phi_factorial_log(2, p)), (1, 1): c}
    fs = FockSuperposition(2, terms, p)
    spec = superposition_spectrum(fs)
    assert entropy_general(fs) == pytest.approx(spectrum_entropy(spec), abs=1e-10)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10_000))
def test_random_local_unitary_invariance(m, seed):
    s = schmidt_single(canonical_phi(m, seed))
    assert s.expanded() == pytest.approx([1 / m] * m, abs=1e-12)


@pytest.mark.parametrize("m,amp", [(1, 1.0), (2, 0.7), (5, 2.0), (10, 5.0)])
def test_coherent_spectrum_matches_closed_form(m, amp):
    spec = coherent_spectrum(m, amp)
    cp = CoherentParams(amp, m)
    assert spectrum_entropy(spec) == pytest.approx(coherent_entropy(cp), abs=1e-10)
    assert spectrum_purity(spec) == pytest.approx(coherent_purity(cp), abs=1e-10)
    assert coherent_spectrum(m, 0.0).weights == (1.0,)
