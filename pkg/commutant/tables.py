"""Orbits of the reduced basis under the two-sided permutation action Ω ↦ T_π Ω T_σ"""

import itertools
from collections import deque
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from commutant.enumeration import reduced_basis
from gf.linalg import rank
from gf.matrix import FMatrix
from monomial.model import Monomial, transposition
from monomial.moves import canonical, multiply
from utils.errors import BadShape, RewriteError
from utils.logging import get_logger


logger = get_logger(__name__)


@dataclass
class ClassRow:
    label: str
    representative: Monomial
    size: int
    members: List[Monomial] = field(default_factory=list, repr=False)


@dataclass
class ClassTable:
    k: int
    q: int
    n: Optional[int] = None
    rows: List[ClassRow] = field(default_factory=list)
    _orbits: Dict[tuple, str] = field(default_factory=dict, repr=False)

    @property
    def total(self) -> int:
        return sum(r.size for r in self.rows)

    def sizes(self) -> Dict[str, int]:
        return {r.label: r.size for r in self.rows}

    def orbit_of(self, mono: Monomial) -> str:
        """Label of the orbit containing mono (any gauge)"""
        return self._orbits[canonical(mono).key()]


def _conjugate(mono: Monomial, i: int) -> Monomial:
    """T_(i,i+1) Ω T_(i,i+1): copies i and i+1 trade places"""
    order = list(range(mono.k))
    order[i], order[i + 1] = order[i + 1], order[i]
    return canonical(Monomial(mono.k, mono.q, mono.v.take_rows(order), mono.phases))


def _left_swap(mono: Monomial) -> Monomial:
    product = multiply(transposition(mono.k, 0, 1, mono.q), mono)
    if product.dpower:
        raise RewriteError(f"permutation times {mono} left a scalar d^{product.dpower}")
    return canonical(product.reduced)


def _neighbours(mono: Monomial):
    # left multiplication by T_(01) and conjugation by adjacent swaps generate the action
    if mono.k >= 2:
        yield _left_swap(mono)
    for i in range(mono.k - 1):
        yield _conjugate(mono, i)


def minimum_weight_basis(v: FMatrix) -> List[Tuple[int, ...]]:
    """Greedy lowest-weight basis of the column space of v"""
    q, m = v.q, v.cols
    a = v.to_array()
    vectors = []
    for coeffs in itertools.product(range(q), repeat=m):
        if any(coeffs):
            vectors.append(tuple(int(x) for x in (a @ np.array(coeffs)) % q))
    vectors.sort(key=lambda x: (sum(1 for e in x if e), x))
    basis: List[Tuple[int, ...]] = []
    for x in vectors:
        candidate = FMatrix.from_columns(basis + [x], q, rows=v.rows)
        if rank(candidate) == len(basis) + 1:
            basis.append(x)
        if len(basis) == m:
            break
    return basis


def _weights(mono: Monomial) -> Tuple[int, ...]:
    return tuple(sorted((sum(1 for e in x if e) for x in minimum_weight_basis(mono.v)), reverse=True))


def _order_key(mono: Monomial):
    return (mono.m, mono.has_phases(), _weights(mono), mono.key())


def label_for(mono: Monomial) -> str:
    """Omega_2 for permutations, otherwise the weights of a lowest-weight column basis"""
    if mono.m == 0:
        return "Omega_2"
    return "Omega_" + "".join(str(w) for w in _weights(mono)) + ("'" if mono.has_phases() else "")


def class_table(k: int, n: Optional[int] = None, q: int = 2) -> ClassTable:
    """
    Group the reduced basis into orbits of the two-sided permutation action.

    The orbits live on the reduced basis, which is the same for every n, so n only tags the
    returned table. It must be positive when given.

    Raises:
        BadShape: if n < 1
    """
    if n is not None and n < 1:
        raise BadShape(f"class table needs n >= 1, got {n}")
    table = _class_table(k, q)
    return table if n is None else replace(table, n=n)


@lru_cache(maxsize=8)
def _class_table(k: int, q: int) -> ClassTable:
    """
    Orbits of the reduced basis for one (k, q), shared by every n.

    Rows are ordered by their representative, the minimal member by order, then by the
    weights of a lowest-weight column basis. Repeated labels get a letter suffix.
    """
    basis = reduced_basis(k, q)
    table = ClassTable(k, q)
    seen: Dict[tuple, int] = {}
    orbits: List[List[Monomial]] = []
    for start in basis:
        if start.key() in seen:
            continue
        index = len(orbits)
        members = [start]
        seen[start.key()] = index
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for nxt in _neighbours(current):
                if nxt.key() not in seen:
                    seen[nxt.key()] = index
                    members.append(nxt)
                    queue.append(nxt)
        orbits.append(members)
        logger.debug(f"orbit {index} of k={k} has {len(members)} members")
    reps = []
    for members in orbits:
        low = min(x.m for x in members)
        reps.append(min((x for x in members if x.m == low), key=_order_key))
    order = sorted(range(len(orbits)), key=lambda i: _order_key(reps[i]))
    used: Dict[str, int] = {}
    names: Dict[int, str] = {}
    for i in order:
        base = label_for(reps[i])
        used[base] = used.get(base, 0) + 1
        label = base if used[base] == 1 else f"{base}{chr(ord('a') + used[base] - 1)}"
        names[i] = label
        table.rows.append(ClassRow(label, reps[i], len(orbits[i]), orbits[i]))
    table._orbits = {key: names[i] for key, i in seen.items()}
    logger.info(f"class table for k={k}: {len(table.rows)} orbits, {table.total} monomials")
    return table
