"""Clifford generators, Pauli identification and commutation checks"""

from collections import deque
from typing import Dict, List, Optional, Tuple

import numpy as np

from config import settings
from dense.operators import DenseOperator, check_cap, pauli_matrix
from pauli.strings import PauliString, all_paulis, tau_exponent
from utils.errors import BadShape
from utils.logging import get_logger


logger = get_logger(__name__)


def _embed(gate: np.ndarray, first: int, width: int, n: int, q: int) -> np.ndarray:
    """Place a gate acting on qudits [first, first+width) into n qudits"""
    left = np.eye(q ** first)
    right = np.eye(q ** (n - first - width))
    return np.kron(np.kron(left, gate), right)


def fourier_gate(q: int = 2) -> np.ndarray:
    """F|j> = Σ_k ω^{jk}|k>/√q; the Hadamard for q=2"""
    omega = np.exp(2j * np.pi / q)
    j = np.arange(q)
    return omega ** np.outer(j, j) / np.sqrt(q)


def phase_gate(q: int = 2) -> np.ndarray:
    """S|j> = τ^{j²}|j>; diag(1, i) for q=2"""
    tau = np.exp(1j * np.pi * tau_exponent(q) / q)
    return np.diag(tau ** (np.arange(q) ** 2))


def sum_gate(q: int = 2) -> np.ndarray:
    """SUM|i,j> = |i, i+j>; CNOT for q=2"""
    out = np.zeros((q * q, q * q))
    for i in range(q):
        for j in range(q):
            out[i * q + (i + j) % q, i * q + j] = 1
    return out


def clifford_generators(n: int, q: int = 2) -> List[DenseOperator]:
    """Fourier and phase gates on every qudit plus SUM on adjacent pairs"""
    check_cap(q ** n)
    gens = []
    for i in range(n):
        gens.append(DenseOperator(_embed(fourier_gate(q), i, 1, n, q), n, 1, q, label=f"F{i}"))
        gens.append(DenseOperator(_embed(phase_gate(q), i, 1, n, q), n, 1, q, label=f"S{i}"))
    for i in range(n - 1):
        gens.append(DenseOperator(_embed(sum_gate(q), i, 2, n, q), n, 1, q, label=f"SUM{i}"))
    return gens


def identify_pauli(matrix: np.ndarray, n: int, q: int = 2, tol: float = 1e-9) -> Tuple[PauliString, complex]:
    """
    Write a matrix as phase · W(b)

    Raises:
        BadShape: if the matrix is not a phase times a Pauli
    """
    d = q ** n
    for p in all_paulis(n, q):
        overlap = np.trace(pauli_matrix(p).conj().T @ matrix) / d
        if abs(abs(overlap) - 1) < tol:
            if np.allclose(matrix, overlap * pauli_matrix(p), atol=tol):
                return p, complex(overlap)
    raise BadShape("matrix is not proportional to a Pauli operator")


def is_clifford(u: np.ndarray, n: int, q: int = 2, tol: float = 1e-9) -> bool:
    """True if u is unitary and maps every X_i and Z_i to a phase times a Pauli"""
    d = q ** n
    if not np.allclose(u @ u.conj().T, np.eye(d), atol=tol):
        return False
    for i in range(n):
        for bits in ((1, 0), (0, 1)):
            x, z = [0] * n, [0] * n
            x[i], z[i] = bits
            p = pauli_matrix(PauliString.from_xz(x, z, q))
            try:
                identify_pauli(u @ p @ u.conj().T, n, q, tol)
            except BadShape:
                return False
    return True


def _phase_free_key(u: np.ndarray, decimals: int = 8) -> bytes:
    flat = u.ravel()
    pivot = flat[np.argmax(np.abs(flat) > 1e-9)]
    normalized = u * (abs(pivot) / pivot)
    re = np.round(normalized.real, decimals) + 0.0
    im = np.round(normalized.imag, decimals) + 0.0
    return re.tobytes() + im.tobytes()


def clifford_closure(n: int, q: int = 2, limit: int = 200000) -> List[np.ndarray]:
    """The Clifford group modulo global phase, by breadth-first closure over the generators"""
    d = q ** n
    gens = [g.matrix for g in clifford_generators(n, q)]
    start = np.eye(d, dtype=complex)
    seen: Dict[bytes, np.ndarray] = {_phase_free_key(start): start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for g in gens:
            w = g @ u
            key = _phase_free_key(w)
            if key not in seen:
                seen[key] = w
                queue.append(w)
                if len(seen) > limit:
                    raise BadShape(f"closure exceeded {limit} elements")
    logger.info(f"Clifford closure on n={n}, q={q}: {len(seen)} elements modulo phase")
    return list(seen.values())


def conjugate_copies(matrix: np.ndarray, gate: np.ndarray, k: int) -> np.ndarray:
    """
    g^{⊗k} A g^{†⊗k} for a copy-major matrix A, one copy leg at a time

    The k-fold power is never formed; every step contracts a d×d gate into one leg.
    """
    d = gate.shape[0]
    legs = matrix.reshape((d,) * (2 * k))
    for axis in range(k):
        legs = np.moveaxis(np.tensordot(gate, legs, axes=([1], [axis])), 0, axis)
    conj = gate.conj()
    for axis in range(k, 2 * k):
        legs = np.moveaxis(np.tensordot(conj, legs, axes=([1], [axis])), 0, axis)
    return legs.reshape(matrix.shape)


def commutes_with_clifford(o: DenseOperator, tol: Optional[float] = None) -> bool:
    """True if g^{⊗k} o g^{†⊗k} = o for every generator g, entrywise to tol"""
    tol = settings.tolerance if tol is None else tol
    check_cap(o.dim)
    for gate in clifford_generators(o.n, o.q):
        residual = conjugate_copies(o.matrix, gate.matrix, o.k) - o.matrix
        if np.max(np.abs(residual)) > tol:
            logger.debug(f"generator {gate.label} breaks commutation by {np.max(np.abs(residual)):.3e}")
            return False
    return True
