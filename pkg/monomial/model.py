"""
Pauli monomials Ω(V, M).

Ω(V, M) = d^{-m} Σ_{P_1..P_m} ω^{Σ_{i<j} M_ij ⟨P_i, P_j⟩} P_1^{⊗v_1} ⋯ P_m^{⊗v_m}

over n-qudit Weyl operators, where column v_j of the k×m matrix V says how often P_j
appears on each copy. For q=2 the Paulis are the Hermitian X, Y, Z and the weights are
commutation signs.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from gf.matrix import FMatrix, check_prime
from utils.errors import BadShape, IndexOutOfRange, OddColumn


@dataclass(frozen=True)
class Monomial:
    """Ω(V, M) with V of shape k×m and the phase matrix M of shape m×m"""

    k: int
    q: int
    v: FMatrix
    phases: FMatrix

    def __post_init__(self):
        check_prime(self.q)
        if self.v.q != self.q or self.phases.q != self.q:
            raise BadShape("V and M must live over the monomial's field")
        if self.v.rows != self.k:
            raise BadShape(f"V has {self.v.rows} rows but k={self.k}")
        if self.phases.shape != (self.v.cols, self.v.cols):
            raise BadShape(f"M has shape {self.phases.shape}, expected {self.v.cols}x{self.v.cols}")
        if any(self.v.column_sums()):
            raise OddColumn(f"every column of V needs entry sum 0 mod {self.q}: {self.v.column_text()}")
        check_phase_matrix(self.phases)

    @property
    def m(self) -> int:
        return self.v.cols

    def column_weights(self) -> Tuple[int, ...]:
        """Integer entry sums |v_j| (Hamming weights for q=2)"""
        return tuple(int(s) for s in self.v.to_array().sum(axis=0))

    def has_phases(self) -> bool:
        return not self.phases.is_zero()

    def key(self) -> Tuple[int, int, str, str]:
        return (self.k, self.q, self.v.to_text(), self.phases.to_text())

    def phase_entries(self) -> List[Tuple[int, int, int]]:
        """Nonzero strictly-upper entries of M as 1-based (i, j, value)"""
        out = []
        for i in range(self.m):
            for j in range(i + 1, self.m):
                if self.phases[i, j]:
                    out.append((i + 1, j + 1, self.phases[i, j]))
        return out

    def __str__(self) -> str:
        cols = ",".join(self.v.column_text()) or "-"
        edges = " ".join(f"{i}-{j}" + (f":{c}" if self.q > 2 else "") for i, j, c in self.phase_entries())
        return f"Omega[k={self.k}](V={cols}" + (f"; M={edges})" if edges else ")")


def check_phase_matrix(phases: FMatrix) -> None:
    """
    Raises:
        BadShape: unless M is symmetric with zero diagonal (q=2) or antisymmetric (odd q)
    """
    if phases.q == 2:
        if not phases.is_symmetric() or any(phases[i, i] for i in range(phases.rows)):
            raise BadShape("phase matrix over F_2 must be symmetric with zero diagonal")
    elif not phases.is_antisymmetric():
        raise BadShape(f"phase matrix over F_{phases.q} must be antisymmetric")


def phase_matrix(m: int, edges: Iterable[Sequence[int]] = (), q: int = 2) -> FMatrix:
    """Build M from 1-based strictly-upper entries (i, j) or (i, j, value)"""
    data = np.zeros((m, m), dtype=np.int64)
    for edge in edges:
        i, j = int(edge[0]) - 1, int(edge[1]) - 1
        value = int(edge[2]) if len(edge) > 2 else 1
        if not (0 <= i < j < m):
            raise IndexOutOfRange(f"phase entry {tuple(edge)} is not strictly upper in a {m}x{m} matrix")
        data[i, j] = value
        data[j, i] = value if q == 2 else -value
    return FMatrix(data, q)


def monomial_from_columns(
    k: int, columns: Sequence[Sequence[int]], edges: Iterable[Sequence[int]] = (), q: int = 2
) -> Monomial:
    """Monomial from explicit column vectors and 1-based phase entries"""
    columns = [tuple(int(x) for x in c) for c in columns]
    if any(len(c) != k for c in columns):
        raise BadShape(f"every column must have length k={k}")
    v = FMatrix.from_columns(columns, q, rows=k)
    return Monomial(k, q, v, phase_matrix(len(columns), edges, q))


def monomial_from_text(
    k: int, columns: Sequence[str], edges: Iterable[Sequence[int]] = (), q: int = 2
) -> Monomial:
    """Monomial from digit-string columns such as ["111100", "001111"]"""
    return monomial_from_columns(k, [[int(ch, 36) for ch in c] for c in columns], edges, q)


def identity_monomial(k: int, q: int = 2) -> Monomial:
    """The m=0 monomial, equal to the identity operator"""
    return Monomial(k, q, FMatrix.zeros(k, 0, q), FMatrix.zeros(0, 0, q))


def primitive(k: int, v: Sequence[int], q: int = 2) -> Monomial:
    """
    Single-column monomial Ω(v) = (1/d) Σ_P P^{⊗v}

    Raises:
        OddColumn: if the entries of v do not sum to 0 mod q
    """
    return monomial_from_columns(k, [v], (), q)


def transposition(k: int, a: int, b: int, q: int = 2) -> Monomial:
    """The swap of copies a and b (0-based) as the primitive on e_a − e_b"""
    if not (0 <= a < k and 0 <= b < k) or a == b:
        raise IndexOutOfRange(f"cannot swap copies {a} and {b} of {k}")
    col = [0] * k
    col[a] = 1
    col[b] = q - 1
    return primitive(k, col, q)


def transposition_factors(perm: Sequence[int]) -> List[Tuple[int, int]]:
    """Transpositions t_1, ..., t_r with perm = t_1 t_2 ⋯ t_r (perm[j] = π(j))"""
    perm = list(perm)
    k = len(perm)
    current = list(range(k))
    factors = []
    # right-multiplying by (i j) swaps the images of i and j
    for i in range(k):
        if current[i] != perm[i]:
            j = current.index(perm[i])
            current[i], current[j] = current[j], current[i]
            factors.append((i, j))
    return factors


def permutation_monomial(k: int, perm: Sequence[int], q: int = 2) -> Monomial:
    """T_π as a reduced monomial, the product of its transposition factors"""
    from monomial.moves import canonical, multiply

    if sorted(perm) != list(range(k)):
        raise BadShape(f"{tuple(perm)} is not a permutation of {k} copies")
    result = identity_monomial(k, q)
    for a, b in transposition_factors(perm):
        result = multiply(result, transposition(k, a, b, q)).reduced
    return canonical(result)


_NAMED: Dict[str, Tuple[int, Tuple[str, ...], Tuple[Tuple[int, int], ...]]] = {
    "Omega_2": (2, ("11",), ()),
    "Omega_4": (4, ("1111",), ()),
    "Omega_6": (6, ("111111",), ()),
    "Omega_44": (6, ("111100", "001111"), ()),
    "Omega_66": (8, ("11111100", "00111111"), ()),
    "triple": (9, ("111000111", "000111111"), ()),
}


def named_monomial(name: str, k: Optional[int] = None) -> Monomial:
    """
    Standard monomials: Omega_2 (swap), Omega_4, Omega_6, Omega_44, Omega_66 and the
    triple-purity monomial; k pads the columns with zero rows.
    """
    try:
        base_k, columns, edges = _NAMED[name]
    except KeyError as e:
        raise BadShape(f"unknown monomial name {name!r}; known: {sorted(_NAMED)}") from e
    k = base_k if k is None else k
    if k < base_k:
        raise BadShape(f"{name} needs k >= {base_k}")
    return monomial_from_text(k, [c + "0" * (k - base_k) for c in columns], edges)


@dataclass(frozen=True)
class LambdaMatrix:
    """
    Λ = strictUpper(V^T V) + diag(w) + M, the single object transformed by column moves.

    For q=2, w_i = |v_i|/2 mod 2; for odd q, w_i = (V^T V)_ii / 2 mod q.
    """

    lam: FMatrix

    def form(self, x: np.ndarray, y: np.ndarray) -> int:
        return int(x @ self.lam.to_array() @ y) % self.lam.q


def lambda_matrix(mono: Monomial) -> LambdaMatrix:
    q = mono.q
    v = mono.v.to_array()
    h = v.T @ v
    lam = np.triu(h, 1) + mono.phases.to_array()
    if q == 2:
        weights = v.sum(axis=0)
        lam = lam + np.diag((weights // 2) % 2)
    else:
        lam = lam + np.diag((np.diag(h) * pow(2, -1, q)) % q)
    return LambdaMatrix(FMatrix(lam, q))


def decode_lambda(lam: LambdaMatrix) -> FMatrix:
    """Recover M from the strictly lower triangle of Λ"""
    q = lam.lam.q
    low = np.tril(lam.lam.to_array(), -1)
    if q == 2:
        return FMatrix(low + low.T, q)
    return FMatrix(low - low.T, q)
