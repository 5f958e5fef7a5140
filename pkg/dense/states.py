"""Pure states on n qudits and their k-copy density operators"""

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from dense.clifford import clifford_generators
from dense.operators import DenseOperator, check_cap, pauli_matrix
from pauli.strings import PauliString
from utils.errors import BadShape
from utils.logging import get_logger


logger = get_logger(__name__)

NORM_TOLERANCE = 1e-12


@dataclass
class StateVector:
    """Unit vector in (C^q)^{⊗n}, qudit 1 most significant"""

    amplitudes: np.ndarray
    n: int
    q: int = 2
    label: Optional[str] = field(default=None, compare=False)
    seed: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if self.amplitudes.size != self.dim:
            raise BadShape(f"{self.amplitudes.size} amplitudes do not fit n={self.n}, q={self.q}")
        norm = np.linalg.norm(self.amplitudes)
        if abs(norm - 1) > NORM_TOLERANCE:
            raise BadShape(f"state has norm {norm:.15f}, expected 1")

    @property
    def dim(self) -> int:
        return self.q ** self.n

    def density(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def expectation(self, p: PauliString) -> complex:
        """tr(P ψ)"""
        return complex(np.vdot(self.amplitudes, pauli_matrix(p) @ self.amplitudes))

    def copies(self, k: int, cap: Optional[int] = None) -> DenseOperator:
        """ψ^{⊗k} as a k-copy operator"""
        check_cap(self.dim ** k, cap)
        rho = self.density()
        out = np.ones((1, 1), dtype=complex)
        for _ in range(k):
            out = np.kron(out, rho)
        return DenseOperator(out, self.n, k, self.q)

    def evolve(self, u: np.ndarray) -> "StateVector":
        return StateVector(u @ self.amplitudes, self.n, self.q, self.label, self.seed)


def density(state: StateVector) -> np.ndarray:
    return state.density()


def from_amplitudes(values: Sequence[complex], q: int = 2, normalize: bool = True) -> StateVector:
    """
    Build a state from raw amplitudes

    Raises:
        BadShape: if the length is not a power of q or the vector is zero
    """
    amps = np.asarray(values, dtype=complex).reshape(-1)
    n = int(round(np.log(amps.size) / np.log(q))) if amps.size > 1 else 0
    if q ** n != amps.size or n == 0:
        raise BadShape(f"{amps.size} amplitudes are not a power of q={q}")
    norm = np.linalg.norm(amps)
    if norm == 0:
        raise BadShape("zero vector is not a state")
    return StateVector(amps / norm if normalize else amps, n, q)


def zero_state(n: int, q: int = 2) -> StateVector:
    amps = np.zeros(q ** n, dtype=complex)
    amps[0] = 1
    return StateVector(amps, n, q, label="zero")


def plus_state(n: int, q: int = 2) -> StateVector:
    return StateVector(np.full(q ** n, q ** (-n / 2), dtype=complex), n, q, label="plus")


def t_state(n: int = 1) -> StateVector:
    """(|0> + e^{iπ/4}|1>)/√2 on every qubit"""
    single = np.array([1, np.exp(1j * np.pi / 4)], dtype=complex) / np.sqrt(2)
    amps = np.ones(1, dtype=complex)
    for _ in range(n):
        amps = np.kron(amps, single)
    return StateVector(amps, n, 2, label="T")


def random_state(n: int, seed: Optional[int] = None, q: int = 2, rng: Optional[np.random.Generator] = None) -> StateVector:
    """Haar-random state from normalized complex Gaussian amplitudes"""
    rng = rng if rng is not None else np.random.default_rng(seed)
    dim = q ** n
    amps = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return StateVector(amps / np.linalg.norm(amps), n, q, label="random", seed=seed)


def apply_random_clifford(
    state: StateVector, depth: int = 40, seed: Optional[int] = None, rng: Optional[np.random.Generator] = None
) -> StateVector:
    """Apply `depth` generators drawn uniformly from the Clifford generating set"""
    rng = rng if rng is not None else np.random.default_rng(seed)
    gens = clifford_generators(state.n, state.q)
    amps = state.amplitudes
    for i in rng.integers(0, len(gens), size=depth):
        amps = gens[i].matrix @ amps
    return StateVector(amps, state.n, state.q, state.label, state.seed)
