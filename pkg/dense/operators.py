"""
Explicit complex matrices for Paulis, monomials and permutations.

Sites of a k-copy operator on n qudits are ordered copy-major: site index = copy·n + qudit,
so each copy occupies one contiguous tensor factor of dimension d = q^n.
"""

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from config import settings
from pauli.strings import PauliString, Phase, tau_exponent
from pauli.tensor import PauliTensor, recompose
from utils.errors import ShapeMismatch, TooLarge
from utils.logging import get_logger


logger = get_logger(__name__)


@dataclass
class DenseOperator:
    """A q^{nk} × q^{nk} complex matrix with its (n, k, q) metadata"""

    matrix: np.ndarray
    n: int
    k: int
    q: int = 2
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=complex)
        if self.matrix.shape != (self.dim, self.dim):
            raise ShapeMismatch(f"matrix shape {self.matrix.shape} does not fit q={self.q}, n={self.n}, k={self.k}")

    @property
    def dim(self) -> int:
        return self.q ** (self.n * self.k)

    @property
    def d(self) -> int:
        return self.q ** self.n

    def _check(self, other: "DenseOperator") -> None:
        if (self.n, self.k, self.q) != (other.n, other.k, other.q):
            raise ShapeMismatch("dense operators disagree in n, k or q")

    def __matmul__(self, other: "DenseOperator") -> "DenseOperator":
        self._check(other)
        return DenseOperator(self.matrix @ other.matrix, self.n, self.k, self.q)

    def __add__(self, other: "DenseOperator") -> "DenseOperator":
        self._check(other)
        return DenseOperator(self.matrix + other.matrix, self.n, self.k, self.q)

    def __sub__(self, other: "DenseOperator") -> "DenseOperator":
        self._check(other)
        return DenseOperator(self.matrix - other.matrix, self.n, self.k, self.q)

    def __mul__(self, scalar: complex) -> "DenseOperator":
        return DenseOperator(self.matrix * scalar, self.n, self.k, self.q)

    __rmul__ = __mul__

    def dagger(self) -> "DenseOperator":
        return DenseOperator(self.matrix.conj().T, self.n, self.k, self.q)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.matrix))) if self.matrix.size else 0.0

    def close_to(self, other: "DenseOperator", tol: Optional[float] = None) -> bool:
        self._check(other)
        tol = settings.tolerance if tol is None else tol
        return (self - other).max_abs() <= tol

    @classmethod
    def identity(cls, n: int, k: int, q: int = 2) -> "DenseOperator":
        check_cap(q ** (n * k))
        return cls(np.eye(q ** (n * k), dtype=complex), n, k, q)


def check_cap(dim: int, cap: Optional[int] = None) -> None:
    """
    Raises:
        TooLarge: if a dense object of dimension dim exceeds the configured cap
    """
    cap = settings.dense_cap if cap is None else cap
    if dim > cap:
        raise TooLarge(f"dense dimension {dim} exceeds the cap {cap}; use the symbolic path or raise --dense-cap")


@lru_cache(maxsize=32)
def _weyl_table(q: int) -> dict:
    zeta = np.exp(1j * np.pi / q)
    tau = zeta ** tau_exponent(q)
    omega = np.exp(2j * np.pi / q)
    shift = np.roll(np.eye(q), 1, axis=0)
    clock = np.diag(omega ** np.arange(q))
    table = {}
    for a in range(q):
        for c in range(q):
            w = tau ** (a * c) * np.linalg.matrix_power(shift, a) @ np.linalg.matrix_power(clock, c)
            if q == 2:
                w = np.round(w.real) + 1j * np.round(w.imag)
            w.setflags(write=False)
            table[(a, c)] = w
    return table


def weyl(a: int, c: int, q: int = 2) -> np.ndarray:
    """Single-qudit τ^{ac} X^a Z^c"""
    return _weyl_table(q)[(a % q, c % q)]


@lru_cache(maxsize=4096)
def weyl_power(a: int, c: int, e: int, q: int = 2) -> np.ndarray:
    out = np.linalg.matrix_power(weyl(a, c, q), e)
    out.setflags(write=False)
    return out


def pauli_matrix(p: PauliString) -> np.ndarray:
    """Matrix of a Pauli string, qudit 1 as the most significant tensor factor"""
    out = np.ones((1, 1), dtype=complex)
    for a, c in zip(p.x, p.z):
        out = np.kron(out, weyl(a, c, p.q))
    return out


def dense_pauli(p: Union[PauliString, PauliTensor], cap: Optional[int] = None) -> DenseOperator:
    """
    Dense matrix of a Pauli string (k=1) or a tensor-copy Pauli with its phase

    Raises:
        TooLarge: beyond the dimension cap
    """
    if isinstance(p, PauliString):
        check_cap(p.q ** p.n, cap)
        return DenseOperator(pauli_matrix(p), p.n, 1, p.q)
    check_cap(p.q ** (p.n * p.k), cap)
    out = np.ones((1, 1), dtype=complex)
    for copy in p.copies():
        out = np.kron(out, pauli_matrix(copy))
    return DenseOperator(p.phase.value * out, p.n, p.k, p.q)


def reorder_sites(matrix: np.ndarray, source_of_target: Sequence[int], site_dim: int) -> np.ndarray:
    """Permute tensor factors: target site t is taken from source site source_of_target[t]"""
    sites = len(source_of_target)
    if sites == 0:
        return matrix
    legs = matrix.reshape((site_dim,) * (2 * sites))
    axes = list(source_of_target) + [sites + s for s in source_of_target]
    dim = site_dim ** sites
    return legs.transpose(axes).reshape(dim, dim)


def copy_major_order(n: int, k: int) -> Tuple[int, ...]:
    """Source site of each copy-major site when the input is qudit-major (qudit·k + copy)"""
    return tuple(u * k + c for c in range(k) for u in range(n))


def single_qudit_monomial(mono) -> np.ndarray:
    """
    The n=1 realization ω(V,M) = q^{-m} Σ_{W_1..W_m} ω^{Σ_{i<j} M_ij ⟨b_i,b_j⟩} ⊗_c ∏_j W_j^{V_cj}

    Every Pauli monomial on n qudits is the n-th tensor power of this matrix.
    """
    k, q, m = mono.k, mono.q, mono.v.cols
    check_cap(q ** k)
    v = mono.v.to_array()
    phases = mono.phases.to_array()
    omega = np.exp(2j * np.pi / q)
    singles = [(a, c) for a in range(q) for c in range(q)]
    out = np.zeros((q ** k, q ** k), dtype=complex)
    for tup in itertools.product(singles, repeat=m):
        weight = 0
        for i in range(m):
            for j in range(i + 1, m):
                if phases[i, j]:
                    (a1, c1), (a2, c2) = tup[i], tup[j]
                    weight += phases[i, j] * (c1 * a2 - a1 * c2)
        term = np.ones((1, 1), dtype=complex)
        for row in v:
            copy_op = np.eye(q, dtype=complex)
            for j, e in enumerate(row):
                if e:
                    copy_op = copy_op @ weyl_power(tup[j][0], tup[j][1], int(e), q)
            term = np.kron(term, copy_op)
        out += omega ** (weight % q) * term
    return out / q ** m


def dense_monomial(mono, n: int, cap: Optional[int] = None) -> DenseOperator:
    """
    Dense Ω(V,M) on n qudits as the n-fold tensor power of the single-qudit realization

    Raises:
        TooLarge: beyond the dimension cap
    """
    k, q = mono.k, mono.q
    check_cap(q ** (n * k), cap)
    single = single_qudit_monomial(mono)
    out = np.ones((1, 1), dtype=complex)
    for _ in range(n):
        out = np.kron(out, single)
    out = reorder_sites(out, copy_major_order(n, k), q)
    return DenseOperator(out, n, k, q)


def dense_monomial_direct(mono, n: int, cap: Optional[int] = None) -> DenseOperator:
    """Ω(V,M) summed term by term over all n-qudit Pauli tuples (verification only)"""
    from pauli.strings import all_paulis, symplectic

    k, q, m = mono.k, mono.q, mono.v.cols
    check_cap(q ** (n * k), cap)
    phases = mono.phases.to_array()
    d = q ** n
    out = np.zeros((d ** k, d ** k), dtype=complex)
    paulis = list(all_paulis(n, q))
    for tup in itertools.product(paulis, repeat=m):
        weight = sum(
            int(phases[i, j]) * symplectic(tup[i], tup[j]) for i in range(m) for j in range(i + 1, m)
        )
        tensor = recompose(mono.v, tup, Phase(2 * weight, q), n=n)
        out += dense_pauli(tensor, cap).matrix
    return DenseOperator(out / d ** m, n, k, q)


def permutation_operator(perm: Sequence[int], n: int, q: int = 2, cap: Optional[int] = None) -> DenseOperator:
    """
    T_π moving the content of copy j to copy π(j), with perm[j] = π(j); T_π T_σ = T_{πσ}

    Raises:
        TooLarge: beyond the dimension cap
    """
    k = len(perm)
    d = q ** n
    check_cap(d ** k, cap)
    inverse = [0] * k
    for j, image in enumerate(perm):
        inverse[image] = j
    legs = np.eye(d ** k, dtype=complex).reshape((d,) * (2 * k))
    axes = inverse + [k + j for j in range(k)]
    return DenseOperator(legs.transpose(axes).reshape(d ** k, d ** k), n, k, q)


def symmetric_projector(k: int, n: int, q: int = 2, cap: Optional[int] = None) -> DenseOperator:
    """Π_sym = (1/k!) Σ_π T_π"""
    d = q ** n
    check_cap(d ** k, cap)
    total = np.zeros((d ** k, d ** k), dtype=complex)
    perms = list(itertools.permutations(range(k)))
    for perm in perms:
        total += permutation_operator(perm, n, q, cap).matrix
    return DenseOperator(total / len(perms), n, k, q)


def kron_copies(ops: Sequence[np.ndarray], n: int, q: int = 2) -> DenseOperator:
    """O_1 ⊗ ... ⊗ O_k for single-copy matrices"""
    out = np.ones((1, 1), dtype=complex)
    for op in ops:
        out = np.kron(out, op)
    check_cap(out.shape[0])
    return DenseOperator(out, n, len(ops), q)


def tensor_power(op: np.ndarray, k: int, n: int, q: int = 2) -> DenseOperator:
    return kron_copies([op] * k, n, q)
