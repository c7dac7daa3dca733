"""Entanglement entropy and purity of composite bosons as functions of energy.

Composite bosons built from two fermions (``eps=+1``) or two bosons
(``eps=-1``) are modelled by quadratically deformed oscillators with
deformation parameter ``f = 2/m``. The library gives closed forms for
single quasibosons, Fock states, one-per-mode states and coherent
states, the hydrogen atom for comparison, and a brute-force Schmidt
oracle that checks every closed form.
"""
from ._backend import BACKEND
from .errors import (
    CapacityError,
    ConvergenceError,
    DivergenceError,
    DomainError,
    QuasibosonError,
    ValidationError,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapacityError",
    "ConvergenceError",
    "DivergenceError",
    "DomainError",
    "QuasibosonError",
    "ValidationError",
    "__version__",
]
