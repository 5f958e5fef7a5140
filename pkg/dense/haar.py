"""
Unitary-group baseline: permutation Gram matrices, Weingarten functions and Haar twirls.

Λ_{π,σ} = tr(T_π† T_σ) = d^{#cycles(π^{-1}σ)} over S_k; the Haar k-fold twirl is
Φ(O) = Σ_{π,σ} (Λ⁻¹)_{π,σ} tr(T_π† O) T_σ.
"""

import itertools
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple, Union

import numpy as np
import scipy.linalg
import sympy

from config import settings
from dense.operators import DenseOperator, check_cap, kron_copies, permutation_operator, symmetric_projector
from dense.states import StateVector, zero_state
from utils.errors import TooLarge
from utils.logging import get_logger


logger = get_logger(__name__)


def cycle_count(perm: Tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def _compose(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    """(a∘b)(j) = a(b(j))"""
    return tuple(a[j] for j in b)


def _inverse(a: Tuple[int, ...]) -> Tuple[int, ...]:
    out = [0] * len(a)
    for j, image in enumerate(a):
        out[image] = j
    return tuple(out)


@dataclass
class HaarGram:
    """Gram matrix of the permutation operators; entries are sympy expressions in d"""

    k: int
    perms: List[Tuple[int, ...]]
    entries: sympy.Matrix

    def numeric(self, d: Optional[int] = None) -> np.ndarray:
        entries = self.entries.subs(sympy.Symbol("d"), d) if d is not None else self.entries
        return np.array(entries.tolist(), dtype=float)


def _check_k(k: int) -> None:
    if k > settings.haar_max_k:
        raise TooLarge(f"Haar baseline supports k <= {settings.haar_max_k}, got k={k}")


def haar_gram(k: int, d: Union[int, sympy.Expr, None] = None) -> HaarGram:
    """
    Λ_{π,σ} = d^{#cycles(π^{-1}σ)}; d defaults to the symbol d

    Raises:
        TooLarge: for k above the configured cap
    """
    _check_k(k)
    d = sympy.Symbol("d") if d is None else sympy.sympify(d)
    perms = list(itertools.permutations(range(k)))
    entries = sympy.Matrix(
        len(perms), len(perms), lambda i, j: d ** cycle_count(_compose(_inverse(perms[i]), perms[j]))
    )
    return HaarGram(k, perms, entries)


def haar_weingarten(k: int, d: Union[int, sympy.Expr, None] = None) -> sympy.Matrix:
    """
    Exact inverse of the permutation Gram matrix (symbolic in d when d is omitted)

    Raises:
        TooLarge: for k above the configured cap
        ValueError: from sympy when d < k makes the matrix singular
    """
    gram = haar_gram(k, d)
    inverse = gram.entries.inv()
    return inverse.applyfunc(sympy.factor) if inverse.free_symbols else inverse


def _numeric_weingarten(k: int, d: int) -> np.ndarray:
    if d >= k:
        return np.array(haar_weingarten(k, d).tolist(), dtype=float)
    return scipy.linalg.pinv(haar_gram(k, d).numeric(), rtol=settings.pinv_rtol)


def haar_twirl(o: DenseOperator) -> DenseOperator:
    """
    E_U[U^{⊗k} O U^{†⊗k}] over the unitary group on C^d

    Raises:
        TooLarge: for k above the configured cap or beyond the dimension cap
    """
    _check_k(o.k)
    check_cap(o.dim)
    d = o.d
    perms = list(itertools.permutations(range(o.k)))
    ops = [permutation_operator(p, o.n, o.q).matrix for p in perms]
    wg = _numeric_weingarten(o.k, d)
    overlaps = np.array([np.vdot(t, o.matrix) for t in ops])
    x = wg @ overlaps
    out = np.zeros_like(o.matrix)
    for coeff, t in zip(x, ops):
        out += coeff * t
    logger.debug(f"Haar twirl over S_{o.k} at d={d}")
    return DenseOperator(out, o.n, o.k, o.q)


def symmetric_dimension(k: int, d: int) -> int:
    """tr Π_sym = binom(d + k − 1, k)"""
    return comb(d + k - 1, k)


def haar_state_twirl(state: StateVector, k: int) -> DenseOperator:
    """Φ_haar(ψ^{⊗k}) = Π_sym / tr Π_sym"""
    proj = symmetric_projector(k, state.n, state.q)
    return proj * (1.0 / symmetric_dimension(k, state.dim))


def average_purity(d_a: int, d_b: int) -> float:
    """E_ψ tr(ψ_A²) = (d_A² d_B + d_A d_B²)/(d(d+1)) with d = d_A d_B"""
    d = d_a * d_b
    return (d_a * d_a * d_b + d_a * d_b * d_b) / (d * (d + 1))


def partial_swap(d_a: int, d_b: int) -> np.ndarray:
    """SWAP on the A factors of two copies of C^{d_A} ⊗ C^{d_B}"""
    d = d_a * d_b
    legs = np.eye(d * d, dtype=complex).reshape(d_a, d_b, d_a, d_b, d_a, d_b, d_a, d_b)
    return legs.transpose(2, 1, 0, 3, 4, 5, 6, 7).reshape(d * d, d * d)


def twirled_purity(n_a: int, n_b: int, state: Optional[StateVector] = None) -> float:
    """tr((SWAP_A ⊗ 1_B) Φ_haar(ψ^{⊗2})), which averages the subsystem purity"""
    state = state if state is not None else zero_state(n_a + n_b)
    twirled = haar_twirl(state.copies(2))
    return float(np.real(np.trace(partial_swap(2 ** n_a, 2 ** n_b) @ twirled.matrix)))


def otoc_average(d: int) -> float:
    """Closed form 2d²/((d² − 4)(d² − 1)) of the three-copy Pauli correlator below"""
    return 2 * d * d / ((d * d - 4) * (d * d - 1))


def haar_pauli_correlator(p: np.ndarray, r: np.ndarray, n: int, q: int = 2) -> float:
    """(1/d) tr(Φ_haar(P ⊗ R ⊗ RP) · (R ⊗ P ⊗ PR)) for single-copy Paulis P, R"""
    d = q ** n
    a = kron_copies([p, r, r @ p], n, q)
    b = kron_copies([r, p, p @ r], n, q)
    twirled = haar_twirl(a)
    return float(np.real(np.trace(twirled.matrix @ b.matrix)) / d)


def six_point_otoc(p: np.ndarray, r: np.ndarray, n: int, q: int = 2) -> float:
    """
    Haar average of (1/d) tr(P(U) R R(U) P R(U) P(U) P R) with P(U) = U† P U, written as
    (1/d) tr(T_c Φ_haar(P ⊗ R ⊗ RP)(R ⊗ P ⊗ PR)) where tr(T_c M_1⊗M_2⊗M_3) = tr(M_1 M_2 M_3)
    """
    d = q ** n
    a = kron_copies([p, r, r @ p], n, q)
    b = kron_copies([r, p, p @ r], n, q)
    cycle = permutation_operator((2, 0, 1), n, q).matrix
    twirled = haar_twirl(a)
    return float(np.real(np.trace(cycle @ twirled.matrix @ b.matrix)) / d)
