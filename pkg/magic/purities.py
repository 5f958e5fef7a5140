"""
Stabilizer purities and generalized purities Δ_Ω(ψ) = Re tr(Ω ψ^{⊗k}).

Every Pauli monomial expectation is evaluated as a nested Pauli sum over the table of
tr(Pψ), so no k-copy matrix is formed; the dense path exists for verification.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from dense.operators import dense_monomial
from dense.states import StateVector
from dense.twirl import pauli_coefficients
from monomial.model import Monomial, permutation_monomial
from monomial.moves import concatenate, trace_exponent
from pauli.strings import tau_exponent
from utils.errors import BadShape, TooLarge
from utils.logging import get_logger


logger = get_logger(__name__)

MAX_TERMS = 1 << 22


@dataclass(frozen=True)
class PauliFrame:
    """X and Z exponents of every n-qudit Pauli in all_paulis order"""

    n: int
    q: int
    x: np.ndarray
    z: np.ndarray

    @property
    def size(self) -> int:
        return self.x.shape[0]

    def index(self, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        """Position in all_paulis order of the Paulis with exponents (x, z) along the last axis"""
        out = np.zeros(x.shape[:-1], dtype=np.int64)
        for i in range(self.n):
            out = (out * self.q + x[..., i]) * self.q + z[..., i]
        return out


@lru_cache(maxsize=16)
def pauli_frame(n: int, q: int = 2) -> PauliFrame:
    size = q ** (2 * n)
    idx = np.arange(size)
    bits = np.zeros((size, 2 * n), dtype=np.int64)
    for pos in range(2 * n):
        bits[:, 2 * n - 1 - pos] = (idx // q ** pos) % q
    x, z = bits[:, 0::2].copy(), bits[:, 1::2].copy()
    x.setflags(write=False)
    z.setflags(write=False)
    return PauliFrame(n, q, x, z)


def _flat(digits: np.ndarray, q: int) -> np.ndarray:
    out = np.zeros(digits.shape[:-1], dtype=np.int64)
    for i in range(digits.shape[-1]):
        out = out * q + digits[..., i]
    return out


def expectation_table(state: StateVector) -> np.ndarray:
    """tr(P ψ) for every Pauli P, in all_paulis order"""
    frame = pauli_frame(state.n, state.q)
    b = pauli_coefficients(state.density(), state.n, state.q)
    return np.conj(b[_flat(frame.x, state.q), _flat(frame.z, state.q)]) * state.dim


def multiply_exponents(x1, z1, e1, x2, z2, q: int):
    """Vectorized Pauli product: ζ^{e1} W(x1, z1) · W(x2, z2) = ζ^{e} W(x, z)"""
    t = tau_exponent(q)
    x = (x1 + x2) % q
    z = (z1 + z2) % q
    step = (t * (x1 * z1 + x2 * z2 - x * z) + 2 * z1 * x2).sum(axis=-1)
    return x, z, (e1 + step) % (2 * q)


def _check_qubits(state: StateVector) -> None:
    if state.q != 2:
        raise BadShape(f"stabilizer purities are defined here for qubits, got q={state.q}")


def stabilizer_purity(state: StateVector, alpha: int, table: Optional[np.ndarray] = None) -> float:
    """Δ_{2α}(ψ) = (1/d) Σ_P tr^{2α}(Pψ)"""
    _check_qubits(state)
    if alpha < 1:
        raise BadShape(f"alpha must be a positive integer, got {alpha}")
    table = expectation_table(state) if table is None else table
    return float(np.sum(np.real(table) ** (2 * alpha)) / state.dim)


def stabilizer_entropy(state: StateVector, alpha: int, table: Optional[np.ndarray] = None) -> float:
    """M_α = log2(Δ_{2α}) / (1 − α)"""
    if alpha == 1:
        raise BadShape("the α = 1 entropy is not a purity ratio")
    return math.log2(stabilizer_purity(state, alpha, table)) / (1 - alpha)


def monomial_expectation(state: StateVector, mono: Monomial, table: Optional[np.ndarray] = None) -> complex:
    """
    tr(Ω(V, M) ψ^{⊗k}) = d^{-m} Σ_{P_1..P_m} ω^{Σ_{i<j} M_ij ⟨P_i,P_j⟩} ∏_c tr(∏_j P_j^{V_cj} ψ)

    Raises:
        TooLarge: if the nested sum has more than MAX_TERMS terms
    """
    if mono.q != state.q:
        raise BadShape("state and monomial live over different fields")
    q, n, m = state.q, state.n, mono.m
    if m == 0:
        return 1.0 + 0j
    frame = pauli_frame(n, q)
    terms = frame.size ** m
    if terms > MAX_TERMS:
        raise TooLarge(f"{terms} Pauli tuples exceed the nested-sum limit {MAX_TERMS}")
    table = expectation_table(state) if table is None else table
    tuples = np.indices((frame.size,) * m).reshape(m, -1)
    xs, zs = frame.x[tuples], frame.z[tuples]
    phases = mono.phases.to_array()
    weight = np.zeros(tuples.shape[1], dtype=np.int64)
    for i in range(m):
        for j in range(i + 1, m):
            if phases[i, j]:
                form = (zs[i] * xs[j] - xs[i] * zs[j]).sum(axis=-1)
                weight += 2 * phases[i, j] * form
    total = np.exp(1j * np.pi * (weight % (2 * q)) / q)
    v = mono.v.to_array()
    for row in v:
        x = np.zeros_like(xs[0])
        z = np.zeros_like(zs[0])
        e = np.zeros(tuples.shape[1], dtype=np.int64)
        for j, power in enumerate(row):
            for _ in range(int(power)):
                x, z, e = multiply_exponents(x, z, e, xs[j], zs[j], q)
        total = total * np.exp(1j * np.pi * e / q) * table[frame.index(x, z)]
    return complex(total.sum() / float(state.dim) ** m)


def generalized_purity(state: StateVector, mono: Monomial, dense: bool = False) -> float:
    """
    Δ_Ω(ψ) = Re tr(Ω ψ^{⊗k}), a Clifford-invariant magic measure

    Raises:
        TooLarge: beyond the nested-sum limit, or the dense cap when dense=True
    """
    if dense:
        op = dense_monomial(mono, state.n)
        rho = state.copies(mono.k)
        return float(np.real(np.trace(op.matrix @ rho.matrix)))
    return float(np.real(monomial_expectation(state, mono)))


def _pair_products(state: StateVector, table: np.ndarray) -> np.ndarray:
    """tr(P Q ψ) for every ordered pair (P, Q)"""
    frame = pauli_frame(state.n, state.q)
    size = frame.size
    x1 = np.broadcast_to(frame.x[:, None, :], (size, size, state.n))
    z1 = np.broadcast_to(frame.z[:, None, :], (size, size, state.n))
    x2 = np.broadcast_to(frame.x[None, :, :], (size, size, state.n))
    z2 = np.broadcast_to(frame.z[None, :, :], (size, size, state.n))
    x, z, e = multiply_exponents(x1, z1, np.zeros((size, size), dtype=np.int64), x2, z2, state.q)
    return np.exp(1j * np.pi * e / state.q) * table[frame.index(x, z)]


def triple_purity(state: StateVector, absolute: bool = False) -> float:
    """
    (1/d²) Σ_{P,Q} tr³(Pψ) tr³(Qψ) tr³(PQψ)

    With absolute=True every trace is replaced by its modulus, which shows the measure
    depends on the signs of the Pauli spectrum.
    """
    _check_qubits(state)
    table = expectation_table(state)
    pairs = _pair_products(state, table)
    single = np.abs(table) if absolute else table
    joint = np.abs(pairs) if absolute else pairs
    total = np.sum(single[:, None] ** 3 * single[None, :] ** 3 * joint ** 3)
    return float(np.real(total)) / state.dim ** 2


def haar_average_purity(mono: Monomial, d: int) -> Fraction:
    """
    Exact Haar average E_ψ Δ_Ω(ψ) = Σ_π tr(Ω T_π) / (k! · tr Π_sym)

    tr(Ω T_π) comes from the monomial trace rule, so no matrices are formed.
    """

    k = mono.k
    total = 0
    for perm in itertools.permutations(range(k)):
        total += d ** trace_exponent(concatenate(mono, permutation_monomial(k, perm, mono.q)))
    return Fraction(total, math.factorial(k) * math.comb(d + k - 1, k))


def haar_purity_constant(mono: Monomial) -> int:
    """c_Ω: number of permutations reaching the leading Haar-average trace, so E Δ_Ω ≈ c_Ω/d^{m}"""

    k = mono.k
    exponents = [
        trace_exponent(concatenate(mono, permutation_monomial(k, perm, mono.q)))
        for perm in itertools.permutations(range(k))
    ]
    top = max(exponents)
    return sum(1 for e in exponents if e == top)
