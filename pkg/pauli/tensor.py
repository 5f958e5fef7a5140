"""Pauli operators on k tensor copies, anticommutation graphs and the (V, Pauli list) decomposition"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from gf.linalg import antisymmetric_canonical, column_echelon, rank
from gf.matrix import FMatrix
from pauli.strings import (
    Phase,
    PauliString,
    parse_pauli,
    format_pauli,
    pauli_mul,
    pauli_power,
    symplectic,
)
from utils.errors import BadShape, Infeasible, ShapeMismatch
from utils.logging import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class PauliTensor:
    """phase · Q_1 ⊗ ... ⊗ Q_k, row j of `rows` holding the bits of Q_j"""

    q: int
    n: int
    k: int
    rows: FMatrix
    phase: Phase

    def __post_init__(self):
        if self.rows.shape != (self.k, 2 * self.n) or self.rows.q != self.q:
            raise BadShape(f"tensor rows {self.rows.shape} do not fit k={self.k}, n={self.n}")
        if self.phase.q != self.q:
            raise ShapeMismatch("tensor phase lives over a different field")

    @classmethod
    def from_copies(cls, copies: Sequence[PauliString], phase: Phase = None) -> "PauliTensor":
        if not copies:
            raise BadShape("a tensor needs at least one copy")
        q, n = copies[0].q, copies[0].n
        if any(c.q != q or c.n != n for c in copies):
            raise ShapeMismatch("tensor copies disagree in q or n")
        rows = FMatrix.from_rows([c.bits for c in copies], q, cols=2 * n)
        return cls(q, n, len(copies), rows, phase if phase is not None else Phase.one(q))

    @classmethod
    def identity(cls, n: int, k: int, q: int = 2) -> "PauliTensor":
        return cls(q, n, k, FMatrix.zeros(k, 2 * n, q), Phase.one(q))

    def copies(self) -> List[PauliString]:
        return [PauliString(self.q, self.n, self.rows.row(j)) for j in range(self.k)]

    def __matmul__(self, other: "PauliTensor") -> "PauliTensor":
        """Operator product, copy by copy"""
        if (self.q, self.n, self.k) != (other.q, other.n, other.k):
            raise ShapeMismatch("tensors disagree in q, n or k")
        phase = self.phase * other.phase
        out = []
        for a, b in zip(self.copies(), other.copies()):
            r, step = pauli_mul(a, b)
            phase = phase * step
            out.append(r)
        return PauliTensor.from_copies(out, phase)

    def __str__(self) -> str:
        return "|".join(format_pauli(c) for c in self.copies())


def parse_tensor(text: str, q: int = 2) -> PauliTensor:
    """Parse "XX|ZI|YY" style literals (copies separated by '|', phase +1)"""
    return PauliTensor.from_copies([parse_pauli(part, q) for part in text.split("|")])


@dataclass(frozen=True)
class AnticommGraph:
    """g[i][j] = ⟨b_i, b_j⟩, so P_i P_j = ω^{g_ij} P_j P_i"""

    g: FMatrix

    @property
    def size(self) -> int:
        return self.g.rows


def anticomm_graph(ps: Sequence[PauliString], q: int = 2) -> AnticommGraph:
    """
    Anticommutation graph of a list of Paulis

    Args:
        ps: Paulis on a common (q, n)
        q: field used for the empty list

    Raises:
        ShapeMismatch: if the Paulis disagree in q or n
    """
    ps = list(ps)
    if not ps:
        return AnticommGraph(FMatrix.zeros(0, 0, q))
    q = ps[0].q
    size = len(ps)
    data = np.zeros((size, size), dtype=np.int64)
    for i in range(size):
        for j in range(i + 1, size):
            s = symplectic(ps[i], ps[j])
            data[i, j] = s
            data[j, i] = -s
    return AnticommGraph(FMatrix(data, q))


def _copy_product(column_exponents: Sequence[int], paulis: Sequence[PauliString]) -> Tuple[PauliString, Phase]:
    """∏_j P_j^{e_j} in order of j"""
    result, phase = PauliString.identity(paulis[0].n, paulis[0].q), Phase.one(paulis[0].q)
    for e, p in zip(column_exponents, paulis):
        if e:
            power, step = pauli_power(p, e)
            result, mul_step = pauli_mul(result, power)
            phase = phase * step * mul_step
    return result, phase


def recompose(v: FMatrix, paulis: Sequence[PauliString], phase: Phase, n: int = None) -> PauliTensor:
    """
    Build ϕ · P_1^{⊗v_1} ⋯ P_m^{⊗v_m} as a PauliTensor.

    Copy c carries ∏_j P_j^{V_cj}; n is needed only when the Pauli list is empty.
    """
    paulis = list(paulis)
    q = v.q
    if v.cols != len(paulis):
        raise ShapeMismatch(f"V has {v.cols} columns but {len(paulis)} Paulis were given")
    if not paulis:
        if n is None:
            raise BadShape("n is required to recompose an empty Pauli list")
        t = PauliTensor.identity(n, v.rows, q)
        return PauliTensor(q, n, v.rows, t.rows, phase)
    total = phase
    copies = []
    for c in range(v.rows):
        p, step = _copy_product(v.row(c), paulis)
        copies.append(p)
        total = total * step
    return PauliTensor.from_copies(copies, total)


def decompose_tensor(t: PauliTensor) -> Tuple[FMatrix, List[PauliString], Phase]:
    """
    Write a tensor-copy Pauli as ϕ · P_1^{⊗v_1} ⋯ P_m^{⊗v_m}.

    V is the reduced column-echelon form of the copy/bit matrix, which fixes the factors
    uniquely; the P_j are algebraically independent and m is the rank of t.rows.

    Returns:
        (V, paulis, phase)
    """
    echelon, transform = column_echelon(t.rows)
    # rows · A = [E | 0], hence rows = E · (first m rows of A^{-1})
    m = rank(echelon)
    v = echelon.take_columns(range(m))
    factors = transform.inverse.take_rows(range(m))
    paulis = [PauliString(t.q, t.n, factors.row(j)) for j in range(m)]
    if not paulis:
        return v, [], t.phase
    rebuilt = recompose(v, paulis, Phase.one(t.q))
    return v, paulis, t.phase * rebuilt.phase.conjugate()


def canonical_paulis(m: int, half_rank: int, n: int, q: int = 2) -> List[PauliString]:
    """
    Paulis realizing the canonical graph: pairs (X_i, Z_i^{-1}) on qudit i for i < half_rank,
    then Z on the following qudits for the radical.

    Raises:
        Infeasible: if m − half_rank > n
    """
    if m - half_rank > n:
        raise Infeasible(f"{m} Paulis with graph rank {2 * half_rank} need more than {n} qudits")
    out = []
    for i in range(half_rank):
        x, z = [0] * n, [0] * n
        x[i] = 1
        out.append(PauliString.from_xz(x, z, q))
        x, z = [0] * n, [0] * n
        z[i] = q - 1
        out.append(PauliString.from_xz(x, z, q))
    for j in range(m - 2 * half_rank):
        x, z = [0] * n, [0] * n
        z[half_rank + j] = 1
        out.append(PauliString.from_xz(x, z, q))
    return out


def sample_class_member(cls, n: int) -> List[PauliString]:
    """
    Algebraically independent Paulis on n qudits with a prescribed anticommutation graph.

    Args:
        cls: a class label carrying the graph as `.g`, or the graph matrix itself
        n: number of qudits

    Raises:
        Infeasible: if rank(g) < 2(m − n)
    """
    g = cls if isinstance(cls, FMatrix) else cls.g
    transform, half_rank = antisymmetric_canonical(g)
    m = g.rows
    if m == 0:
        return []
    base = canonical_paulis(m, half_rank, n, g.q)
    # graph(S · B) = S graph(B) S^T and T^T g T is canonical, so S = T^{-T}
    s = transform.inverse.T
    rows = s @ FMatrix.from_rows([p.bits for p in base], g.q, cols=2 * n)
    logger.debug(f"sampled {m} Paulis on {n} qudits, graph half rank {half_rank}")
    return [PauliString(g.q, n, rows.row(j)) for j in range(m)]


def phi_phase(t: PauliTensor) -> Optional[Phase]:
    """
    Unit phase φ(t) = conj(tr(Q_1 Q_2 ⋯ Q_k)/d), i.e. conj(tr(t · T_{(k⋯21)})/d)

    Returns None when the copy product is not proportional to the identity, which
    happens exactly when some column of the tensor's V has nonzero entry sum.
    """
    copies = t.copies()
    product, phase = copies[0], t.phase
    for c in copies[1:]:
        product, step = pauli_mul(product, c)
        phase = phase * step
    if not product.is_identity():
        return None
    return phase.conjugate()
