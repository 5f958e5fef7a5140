"""
Independent graph-based monomials mho_I([V, G]).

mho_I([V, G]) = (1/|S|) Σ_{Q ∈ S} φ(Q) Q, where S collects the phase-free Pauli tensors
Q = P_1^{⊗v_1} ⋯ P_m^{⊗v_m} built from algebraically independent P_j with graph G, and
φ(Q) is the unit phase of conj(tr(Q_1 ⋯ Q_k)/d). The Clifford twirl of any member Q is
φ*(Q) · mho_I.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from commutant.counting import orbit_size
from commutant.enumeration import CommClass, gauge_fix
from gf.matrix import FMatrix
from pauli.strings import Phase, PauliString, all_paulis
from pauli.tensor import PauliTensor, anticomm_graph, decompose_tensor, phi_phase
from utils.errors import Infeasible
from utils.logging import get_logger


logger = get_logger(__name__)


def _symplectic_table(paulis: List[PauliString], q: int) -> np.ndarray:
    bits = np.array([p.bits for p in paulis], dtype=np.int64)
    x, z = bits[:, 0::2], bits[:, 1::2]
    return (z @ x.T - x @ z.T) % q


def independent_tuples(g: FMatrix, n: int) -> Iterator[Tuple[PauliString, ...]]:
    """
    Ordered tuples of algebraically independent n-qudit Paulis with anticommutation graph g,
    by depth-first search with the graph checked one row at a time
    """
    q, m = g.q, g.rows
    paulis = list(all_paulis(n, q))
    table = _symplectic_table(paulis, q)
    target = g.to_array()
    vectors = np.array([p.bits for p in paulis], dtype=np.int64)

    def search(chosen: List[int], span: set) -> Iterator[Tuple[PauliString, ...]]:
        j = len(chosen)
        if j == m:
            yield tuple(paulis[i] for i in chosen)
            return
        for idx in range(1, len(paulis)):
            if paulis[idx].bits in span:
                continue
            if any(table[c, idx] != target[i, j] for i, c in enumerate(chosen)):
                continue
            grown = {tuple(int(x) for x in (np.array(s) + a * vectors[idx]) % q) for s in span for a in range(q)}
            yield from search(chosen + [idx], grown)

    yield from search([], {tuple([0] * 2 * n)})


@dataclass
class MhoDescription:
    """Lazy Pauli-sum description of mho_I; `size` is |S|, the normalization"""

    cls: CommClass
    n: int
    size: int

    def terms(self) -> Iterator[Tuple[PauliTensor, Phase]]:
        """(Q, φ(Q)) for every Q ∈ S"""
        cls = self.cls
        if cls.m == 0:
            t = PauliTensor.identity(self.n, cls.k, cls.q)
            yield t, Phase.one(cls.q)
            return
        for paulis in independent_tuples(cls.g, self.n):
            b = FMatrix.from_rows([p.bits for p in paulis], cls.q, cols=2 * self.n)
            t = PauliTensor(cls.q, self.n, cls.k, cls.v @ b, Phase.one(cls.q))
            yield t, phi_phase(t)

    def __iter__(self):
        return self.terms()

    @property
    def weight(self) -> float:
        return 1.0 / self.size


def mho_coefficients(cls: CommClass, n: int) -> MhoDescription:
    """
    Describe mho_I(cls) on n qudits

    Raises:
        Infeasible: if the class is not realizable on n qudits
    """
    size = orbit_size(cls, n)
    logger.debug(f"mho_I{cls} on n={n} has {size} terms")
    return MhoDescription(cls, n, size)


def class_of(t: PauliTensor) -> Optional[Tuple[CommClass, Phase]]:
    """
    Class label of a Pauli tensor together with φ(t), or None when some column of its
    V has nonzero entry sum (the Clifford twirl of t then vanishes)
    """
    v, paulis, _ = decompose_tensor(t)
    if any(v.column_sums()):
        return None
    phase = phi_phase(t)
    if phase is None:
        raise Infeasible(f"tensor {t} has even columns but a traceless copy product")
    return gauge_fix(v, anticomm_graph(paulis, t.q).g), phase
