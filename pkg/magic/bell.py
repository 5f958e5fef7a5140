"""Bell magic and the Bell-sampling property tests built on generalized purities"""

import math

import numpy as np

from dense.states import StateVector
from magic.purities import (
    _check_qubits,
    _pair_products,
    expectation_table,
    generalized_purity,
    pauli_frame,
    stabilizer_purity,
)
from monomial.model import named_monomial
from utils.logging import get_logger


logger = get_logger(__name__)


def commutation_signs(n: int) -> np.ndarray:
    """χ(P, R) = ±1 for every pair of n-qubit Paulis"""
    frame = pauli_frame(n, 2)
    form = frame.z @ frame.x.T - frame.x @ frame.z.T
    return 1 - 2 * (form % 2)


def bell_magic_distribution(state: StateVector) -> np.ndarray:
    """Q(P) = (1/d²) Σ_R tr²(Rψ) |tr(PRψ)|², a probability distribution over Paulis"""
    _check_qubits(state)
    table = expectation_table(state)
    pairs = _pair_products(state, table)
    weights = np.real(table) ** 2
    return (np.abs(pairs) ** 2 @ weights) / state.dim ** 2


def bell_magic(state: StateVector) -> float:
    """
    B(ψ) = Σ_{P,R} Q(P) Q(R) (1 − χ(P, R)), zero exactly on stabilizer states

    Evaluated as 1 − Δ_66 through the two-column monomial on eight copies.
    """
    _check_qubits(state)
    return 1.0 - generalized_purity(state, named_monomial("Omega_66"))


def bell_magic_direct(state: StateVector) -> float:
    """B(ψ) from the Q-distribution and the commutation table"""
    dist = bell_magic_distribution(state)
    signs = commutation_signs(state.n)
    return float(dist @ (1 - signs) @ dist)


def bell_magic_bounds(state: StateVector):
    """(1 − Δ_4², 1 − Δ_6²), which bracket the Bell magic"""
    table = expectation_table(state)
    d4 = stabilizer_purity(state, 2, table)
    d6 = stabilizer_purity(state, 3, table)
    return 1.0 - d4 ** 2, 1.0 - d6 ** 2


def testing_success(state: StateVector, tol: float = 1e-12) -> float:
    """Optimal success probability 1/2 + (1 − Δ_6)/4 of telling ψ from a stabilizer state"""
    d6 = stabilizer_purity(state, 3)
    p = 0.5 + (1.0 - d6) / 4.0
    if d6 > 0:
        m3 = math.log2(d6) / (1 - 3)
        via_entropy = 0.5 + (1.0 - 2.0 ** (-2 * m3)) / 4.0
        if abs(via_entropy - p) > tol:
            logger.warning(f"success probability disagrees with its entropy form by {abs(via_entropy - p):.3e}")
    return p


def omega_tester_acceptance(state: StateVector) -> float:
    """Acceptance probability tr(((1 + Ω_6)/2) ψ^{⊗6}) = (1 + Δ_6)/2 of the six-copy tester"""
    d6 = stabilizer_purity(state, 3)
    return (1.0 + d6) / 2.0
