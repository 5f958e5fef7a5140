"""
Normal form Ω = Ω_P · Ω_U of a reduced monomial.

The search works on the form λ(x, y) = x^T Λ y over the column space. A column basis
a_1, ..., a_m gives M' = 0 exactly when λ(a_j, a_i) = 0 for all j > i. Basis vectors are
picked from the right: an odd vector u (λ(u, u) ≠ 0) becomes the rightmost remaining
column and the search continues in {x : λ(u, x) = 0}; once λ vanishes identically on
what is left, that subspace is the projective part.

Some monomials (an M-edge between two commuting even columns) have no such basis. They
are extended first by a pair of equal transposition columns [c, c], which multiplies the
operator by Ω(c)² = 1.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Sequence, Tuple

import numpy as np

from config import settings
from gf.linalg import column_echelon, nullspace, rank
from gf.matrix import FMatrix, GLTransform
from monomial.model import Monomial, identity_monomial, lambda_matrix
from monomial.moves import apply_gl, concatenate, reduce
from utils.errors import RewriteError
from utils.logging import get_logger


logger = get_logger(__name__)

Classification = Literal["projector_scaled", "unitary", "product"]


@dataclass(frozen=True)
class NormalForm:
    """original = d^dpower · projective · unitary"""

    projective: Monomial
    unitary: Monomial
    dpower: int = 0
    extensions: Tuple[Tuple[int, ...], ...] = field(default=())

    @property
    def primitive_count(self) -> int:
        return self.projective.m + self.unitary.m


class _Search:
    """Depth-first basis search for one Λ"""

    def __init__(self, lam: FMatrix, v: FMatrix, node_cap: int):
        self.q = lam.q
        self.lam = lam.to_array()
        self.v = v.to_array()
        self.node_cap = node_cap
        self.nodes = 0
        self.failed = set()

    def form(self, x: np.ndarray, y: np.ndarray) -> int:
        return int(x @ self.lam @ y) % self.q

    def _key(self, basis: np.ndarray) -> str:
        echelon, _ = column_echelon(FMatrix(basis, self.q))
        return echelon.to_text()

    def _candidates(self, basis: np.ndarray):
        """Coefficient vectors by weight, later basis vectors first, leading coefficient 1"""
        t = basis.shape[1]
        out = []
        for support_size in range(1, t + 1):
            for support in itertools.combinations(range(t - 1, -1, -1), support_size):
                for values in itertools.product(range(1, self.q), repeat=support_size - 1):
                    coeffs = np.zeros(t, dtype=np.int64)
                    coeffs[support[0]] = 1
                    for idx, val in zip(support[1:], values):
                        coeffs[idx] = val
                    out.append(np.mod(basis @ coeffs, self.q))
        return out

    def run(self, basis: np.ndarray) -> Optional[Tuple[np.ndarray, List[np.ndarray]]]:
        """Returns (projective basis, odd vectors in the order chosen) or None"""
        self.nodes += 1
        if self.nodes > self.node_cap:
            return None
        t = basis.shape[1]
        if t == 0:
            return basis, []
        restricted = np.mod(basis.T @ self.lam @ basis, self.q)
        if not restricted.any():
            # a column mapped to zero by V would carry a stray factor of d
            if not np.mod(self.v @ basis, self.q).any(axis=0).all():
                return None
            return basis, []
        key = self._key(basis)
        if key in self.failed:
            return None
        for u in self._candidates(basis):
            if not self.form(u, u):
                continue
            if not np.mod(self.v @ u, self.q).any():
                continue
            row = np.mod(u @ self.lam @ basis, self.q)
            kernel = nullspace(FMatrix(row.reshape(1, t), self.q)).to_array()
            found = self.run(np.mod(basis @ kernel, self.q))
            if found is not None:
                projective, odd = found
                return projective, [u] + odd
            if self.nodes > self.node_cap:
                return None
        self.failed.add(key)
        return None


def _try_basis(mono: Monomial, node_cap: int) -> Optional[Tuple[Monomial, Monomial]]:
    lam = lambda_matrix(mono).lam
    search = _Search(lam, mono.v, node_cap)
    found = search.run(np.eye(mono.m, dtype=np.int64))
    if found is None:
        return None
    projective, odd = found
    columns = [projective[:, j] for j in range(projective.shape[1])] + odd[::-1]
    a = FMatrix(np.array(columns, dtype=np.int64).T.reshape(mono.m, mono.m), mono.q)
    if rank(a) != mono.m:
        return None
    moved = apply_gl(mono, a)
    if moved.has_phases():
        raise RewriteError(f"basis search left phases on {moved}")
    if any(not any(c) for c in moved.v.columns()):
        return None
    p = projective.shape[1]
    proj = Monomial(mono.k, mono.q, moved.v.take_columns(range(p)), FMatrix.zeros(p, p, mono.q))
    unit = Monomial(
        mono.k, mono.q, moved.v.take_columns(range(p, mono.m)), FMatrix.zeros(mono.m - p, mono.m - p, mono.q)
    )
    return proj, unit


def _pair_candidates(mono: Monomial) -> List[Tuple[int, ...]]:
    """Transposition columns ordered by how many columns of V they fail to be orthogonal to"""
    q, k = mono.q, mono.k
    v = mono.v.to_array()
    scored = []
    for a, b in itertools.combinations(range(k), 2):
        c = np.zeros(k, dtype=np.int64)
        c[a], c[b] = 1, q - 1
        clash = int(np.count_nonzero(np.mod(c @ v, q)))
        scored.append((clash, a, b, tuple(int(x) for x in c)))
    scored.sort()
    return [s[3] for s in scored]


def _extend(mono: Monomial, pairs: Sequence[Tuple[int, ...]]) -> Monomial:
    cols = [c for pair in pairs for c in (pair, pair)]
    front = Monomial(mono.k, mono.q, FMatrix.from_columns(cols, mono.q, rows=mono.k), FMatrix.zeros(len(cols), len(cols), mono.q))
    return concatenate(front, mono)


def normal_form(
    mono: Monomial, node_cap: Optional[int] = None, max_extensions: Optional[int] = None
) -> NormalForm:
    """
    Factor a monomial into a projective part (commuting even columns) and a unitary part
    (odd columns), both without phases.

    Args:
        mono: the monomial; it is reduced first and the dropped d-power recorded
        node_cap: search budget per attempt (settings.normal_form_node_cap)
        max_extensions: largest number of transposition pairs to try

    Raises:
        RewriteError: if no factorization is found within the budget
    """
    node_cap = settings.normal_form_node_cap if node_cap is None else node_cap
    max_extensions = settings.normal_form_max_extensions if max_extensions is None else max_extensions
    reduction = reduce(mono)
    base = reduction.reduced
    if base.m == 0:
        ident = identity_monomial(base.k, base.q)
        return NormalForm(ident, ident, reduction.dpower)

    found = _try_basis(base, node_cap)
    if found is not None:
        return NormalForm(found[0], found[1], reduction.dpower)

    candidates = _pair_candidates(base)[:8]
    for count in range(1, max_extensions + 1):
        for pairs in itertools.combinations_with_replacement(candidates, count):
            found = _try_basis(_extend(base, pairs), node_cap)
            if found is not None:
                logger.debug(f"normal form of {base} needed {count} transposition pair(s)")
                return NormalForm(found[0], found[1], reduction.dpower, tuple(pairs))
    raise RewriteError(f"no normal form found for {base} within {max_extensions} extensions")


def recombine(nf: NormalForm) -> Monomial:
    """projective · unitary as one (unreduced) monomial"""
    return concatenate(nf.projective, nf.unitary)


def order(mono: Monomial) -> int:
    """Column count of the reduced monomial"""
    return reduce(mono).reduced.m


def classify(mono: Monomial) -> Classification:
    nf = normal_form(mono)
    if nf.projective.m == 0:
        return "unitary"
    if nf.unitary.m == 0:
        return "projector_scaled"
    return "product"
