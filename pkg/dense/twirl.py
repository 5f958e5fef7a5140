"""
Exact Clifford twirling and its Weingarten counterpart.

An operator on k copies is expanded in the Pauli basis with one FFT per X-shift; every
Pauli Q is sent to φ*(Q)·mho_I of its class and the result is assembled back the same way.
No group elements are ever summed.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from commutant.enumeration import CommClass, enumerate_classes
from commutant.mho import mho_coefficients
from dense.operators import DenseOperator, check_cap, dense_monomial
from gf.matrix import FMatrix
from pauli.strings import Phase, all_paulis, symplectic, tau_exponent
from pauli.tensor import PauliTensor, recompose
from utils.errors import ShapeMismatch
from utils.logging import get_logger


logger = get_logger(__name__)


@lru_cache(maxsize=16)
def _digits(sites: int, q: int) -> np.ndarray:
    """Base-q digits of every basis index, site 0 most significant"""
    dim = q ** sites
    idx = np.arange(dim)
    out = np.zeros((dim, sites), dtype=np.int64)
    for s in range(sites):
        out[:, sites - 1 - s] = (idx // q ** s) % q
    out.setflags(write=False)
    return out


def _flat(digits: np.ndarray, q: int) -> np.ndarray:
    sites = digits.shape[-1]
    weights = q ** np.arange(sites - 1, -1, -1)
    return digits @ weights


def _tau_table(sites: int, q: int, a: np.ndarray) -> np.ndarray:
    """τ^{a·c} for one X-shift a and every Z-pattern c"""
    digits = _digits(sites, q)
    exponent = tau_exponent(q) * (digits @ a)
    return np.exp(1j * np.pi * exponent / q)


def pauli_coefficients(matrix: np.ndarray, sites: int, q: int = 2) -> np.ndarray:
    """
    b[a, c] = tr(W(a, c)† O) / D over all Weyl operators on `sites` qudits, indexed by the
    flat X-pattern a and Z-pattern c
    """
    dim = q ** sites
    digits = _digits(sites, q)
    cols = np.arange(dim)
    shape = (q,) * sites
    out = np.zeros((dim, dim), dtype=complex)
    for ai in range(dim):
        shifted = _flat((digits + digits[ai]) % q, q)
        g = matrix[shifted, cols]
        f = np.fft.fftn(g.reshape(shape)).reshape(dim) if sites else g
        out[ai] = np.conj(_tau_table(sites, q, digits[ai])) * f / dim
    return out


def from_pauli_coefficients(b: np.ndarray, sites: int, q: int = 2) -> np.ndarray:
    """Σ_{a,c} b[a, c] W(a, c), the inverse of pauli_coefficients"""
    dim = q ** sites
    digits = _digits(sites, q)
    cols = np.arange(dim)
    shape = (q,) * sites
    out = np.zeros((dim, dim), dtype=complex)
    for ai in range(dim):
        row = b[ai]
        if not np.any(row):
            continue
        weighted = (row * _tau_table(sites, q, digits[ai])).reshape(shape)
        h = (np.fft.ifftn(weighted) * dim).reshape(dim) if sites else weighted.reshape(dim)
        shifted = _flat((digits + digits[ai]) % q, q)
        out[shifted, cols] = h
    return out


def tensor_index(t: PauliTensor) -> Tuple[int, int]:
    """Flat (X-pattern, Z-pattern) index of a tensor in copy-major site order"""
    bits = t.rows.to_array()
    a = bits[:, 0::2].reshape(-1)
    c = bits[:, 1::2].reshape(-1)
    return int(_flat(a, t.q)), int(_flat(c, t.q))


@dataclass
class ClassificationTable:
    """Class id and φ of every Pauli on k copies; -1 marks Paulis whose twirl vanishes"""

    n: int
    k: int
    q: int
    classes: List[CommClass]
    sizes: List[int]
    class_id: np.ndarray
    phi: np.ndarray


@lru_cache(maxsize=8)
def classification_table(n: int, k: int, q: int = 2) -> ClassificationTable:
    dim = q ** (n * k)
    check_cap(dim)
    class_id = np.full((dim, dim), -1, dtype=np.int64)
    phi = np.zeros((dim, dim), dtype=complex)
    classes, sizes = [], []
    for cls in enumerate_classes(n, k, q):
        description = mho_coefficients(cls, n)
        idx = len(classes)
        count = 0
        for t, phase in description.terms():
            a, c = tensor_index(t)
            class_id[a, c] = idx
            phi[a, c] = phase.value
            count += 1
        classes.append(cls)
        sizes.append(count)
    logger.info(f"classified Paulis for n={n}, k={k}, q={q}: {len(classes)} classes")
    class_id.setflags(write=False)
    phi.setflags(write=False)
    return ClassificationTable(n, k, q, classes, sizes, class_id, phi)


def exact_twirl(o: DenseOperator) -> DenseOperator:
    """
    E_C[C^{⊗k} O C^{†⊗k}] over the Clifford group, exactly

    Raises:
        TooLarge: beyond the dimension cap
    """
    n, k, q = o.n, o.k, o.q
    sites = n * k
    table = classification_table(n, k, q)
    b = pauli_coefficients(o.matrix, sites, q)
    mask = table.class_id >= 0
    weights = np.zeros(len(table.classes), dtype=complex)
    np.add.at(weights, table.class_id[mask], b[mask] * np.conj(table.phi[mask]))
    sizes = np.array(table.sizes, dtype=float)
    out = np.zeros_like(b)
    out[mask] = table.phi[mask] * weights[table.class_id[mask]] / sizes[table.class_id[mask]]
    logger.debug(f"twirled a {o.dim}-dimensional operator over {len(table.classes)} classes")
    return DenseOperator(from_pauli_coefficients(out, sites, q), n, k, q)


def dense_mho(cls: CommClass, n: int) -> DenseOperator:
    """Dense mho_I(cls) on n qudits"""
    q, k = cls.q, cls.k
    sites = n * k
    check_cap(q ** sites)
    description = mho_coefficients(cls, n)
    b = np.zeros((q ** sites, q ** sites), dtype=complex)
    for t, phase in description.terms():
        b[tensor_index(t)] = phase.value / description.size
    return DenseOperator(from_pauli_coefficients(b, sites, q), n, k, q)


def dense_graph_monomial(v: FMatrix, g: FMatrix, n: int) -> DenseOperator:
    """mho(V, G) = d^{-m} Σ over all Pauli tuples (dependent ones included) whose graph is G"""
    q, k, m = v.q, v.rows, v.cols
    sites = n * k
    check_cap(q ** sites)
    paulis = list(all_paulis(n, q))
    target = g.to_array()
    b = np.zeros((q ** sites, q ** sites), dtype=complex)

    def search(chosen: list):
        j = len(chosen)
        if j == m:
            t = recompose(v, chosen, Phase.one(q), n=n)
            b[tensor_index(t)] += t.phase.value
            return
        for p in paulis:
            if all(symplectic(c, p) == target[i, j] for i, c in enumerate(chosen)):
                search(chosen + [p])

    search([])
    return DenseOperator(from_pauli_coefficients(b, sites, q) / float(q ** n) ** m, n, k, q)


def gram_dense(basis: Sequence, n: int) -> np.ndarray:
    """tr(Ω_a† Ω_b) from explicit matrices"""
    mats = [dense_monomial(b, n).matrix for b in basis]
    size = len(mats)
    out = np.zeros((size, size), dtype=complex)
    for i in range(size):
        for j in range(size):
            out[i, j] = np.vdot(mats[i], mats[j])
    return out


def weingarten_twirl(o: DenseOperator, basis: Sequence, wmatrix) -> DenseOperator:
    """
    Σ_{Ω,Ω'} W⁺_{Ω,Ω'} tr(Ω† O) Ω'

    Raises:
        ShapeMismatch: if the basis and the Weingarten matrix disagree
    """
    basis = list(basis)
    if wmatrix.entries.shape != (len(basis), len(basis)):
        raise ShapeMismatch(f"Weingarten matrix {wmatrix.entries.shape} does not fit {len(basis)} basis elements")
    if wmatrix.d != o.d:
        raise ShapeMismatch(f"Weingarten matrix was evaluated at d={wmatrix.d}, operator has d={o.d}")
    mats = [dense_monomial(b, o.n).matrix for b in basis]
    overlaps = np.array([np.vdot(m, o.matrix) for m in mats])
    x = wmatrix.entries @ overlaps
    out = np.zeros_like(o.matrix)
    for coeff, m in zip(x, mats):
        out += coeff * m
    return DenseOperator(out, o.n, o.k, o.q)
