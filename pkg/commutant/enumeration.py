"""
Enumeration of the commutant basis classes [V, G].

A class pairs a canonical (reduced column-echelon) k×m matrix V whose columns sum to zero
with an alternating m×m graph G. The class is realizable on n qudits iff rank(G) ≥ 2(m − n).
Classes come out ordered by m, then by subspace, then by G with its strictly-upper entries
read row-major as a lexicographic word.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from commutant.counting import CountReport
from gf.bitops import rank_words
from gf.linalg import column_echelon, rank
from gf.matrix import FMatrix, check_prime
from monomial.model import Monomial
from utils.errors import BadShape, Infeasible
from utils.logging import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class CommClass:
    """Gauge-fixed class label [V, G]"""

    k: int
    q: int
    v: FMatrix
    g: FMatrix

    def __post_init__(self):
        if self.v.rows != self.k or self.g.shape != (self.v.cols, self.v.cols):
            raise BadShape(f"class V {self.v.shape} and G {self.g.shape} do not fit k={self.k}")
        if self.q == 2:
            ok = self.g.is_symmetric() and not any(self.g[i, i] for i in range(self.g.rows))
        else:
            ok = self.g.is_antisymmetric()
        if not ok:
            raise BadShape("class graph must be alternating")

    @property
    def m(self) -> int:
        return self.v.cols

    @property
    def half_rank(self) -> int:
        return rank(self.g) // 2

    def feasible(self, n: int) -> bool:
        return self.m - self.half_rank <= n

    def key(self) -> Tuple[int, int, str, str]:
        return (self.k, self.q, self.v.to_text(), self.g.to_text())

    def __str__(self) -> str:
        cols = ",".join(self.v.column_text()) or "-"
        return f"[V={cols}; G={self.g.to_text() or '-'}]"


def even_subspaces(k: int, m: int, q: int = 2) -> Iterator[FMatrix]:
    """
    Canonical bases of the m-dimensional subspaces of {x ∈ F_q^k : Σ x_i = 0}.

    Each basis is in reduced column-echelon form. Pivots sit in rows 0..k−2, the free
    entries fill the non-pivot rows below each pivot (last row excluded) and the last row
    closes every column to sum zero. There are binom(k−1, m)_q of them.
    """
    q = check_prime(q)
    if k < 1 or m < 0 or m > k - 1:
        return
    if m == 0:
        yield FMatrix.zeros(k, 0, q)
        return
    for pivots in itertools.combinations(range(k - 1), m):
        pivot_set = set(pivots)
        slots = [
            (r, j)
            for j, p in enumerate(pivots)
            for r in range(p + 1, k - 1)
            if r not in pivot_set
        ]
        for values in itertools.product(range(q), repeat=len(slots)):
            v = np.zeros((k, m), dtype=np.int64)
            for j, p in enumerate(pivots):
                v[p, j] = 1
            for (r, j), x in zip(slots, values):
                v[r, j] = x
            v[k - 1] = (-v[: k - 1].sum(axis=0)) % q
            yield FMatrix(v, q)


def _upper_positions(m: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(m) for j in range(i + 1, m)]


def alternating_graphs(m: int, q: int = 2) -> Iterator[FMatrix]:
    """All alternating m×m matrices, strictly-upper entries in row-major lexicographic order"""
    positions = _upper_positions(m)
    for values in itertools.product(range(q), repeat=len(positions)):
        g = np.zeros((m, m), dtype=np.int64)
        for (i, j), x in zip(positions, values):
            g[i, j] = x
            g[j, i] = -x
        yield FMatrix(g % q, q)


def _graph_rank_words(m: int, values: Tuple[int, ...], positions: List[Tuple[int, int]]) -> int:
    """rank of a q=2 graph from its upper entries without building a matrix"""
    words = [0] * m
    for (i, j), x in zip(positions, values):
        if x:
            words[i] |= 1 << j
            words[j] |= 1 << i
    return rank_words(words)


def _admissible_graphs(m: int, n: int, q: int) -> Iterator[FMatrix]:
    need = 2 * (m - n)
    if need <= 0:
        yield from alternating_graphs(m, q)
        return
    if q != 2:
        for g in alternating_graphs(m, q):
            if rank(g) >= need:
                yield g
        return
    positions = _upper_positions(m)
    for values in itertools.product(range(2), repeat=len(positions)):
        if _graph_rank_words(m, values, positions) < need:
            continue
        g = np.zeros((m, m), dtype=np.int64)
        for (i, j), x in zip(positions, values):
            g[i, j] = g[j, i] = x
        yield FMatrix(g, 2)


def enumerate_classes(
    n: int, k: int, q: int = 2, shard: Optional[Tuple[int, int]] = None
) -> Iterator[CommClass]:
    """
    Stream every class [V, G] realizable on n qudits exactly once.

    Args:
        n: number of qudits
        k: number of tensor copies
        q: prime local dimension
        shard: optional (index, count); subspaces are dealt round-robin over shards so the
            union of all shards is the unsharded stream

    Raises:
        BadShape: on an invalid shard
    """
    q = check_prime(q)
    if shard is not None:
        index, count = shard
        if count < 1 or not 0 <= index < count:
            raise BadShape(f"invalid shard {index}/{count}")
    subspace_index = 0
    emitted = 0
    for m in range(k):
        if m - m // 2 > n:
            # even a full-rank graph cannot be realized; later m only get worse
            break
        for v in even_subspaces(k, m, q):
            mine = shard is None or subspace_index % shard[1] == shard[0]
            subspace_index += 1
            if not mine:
                continue
            for g in _admissible_graphs(m, n, q):
                emitted += 1
                yield CommClass(k, q, v, g)
        logger.debug(f"enumerated classes up to m={m}, {emitted} so far")
    logger.info(f"enumerated {emitted} classes for n={n}, k={k}, q={q}" + (f", shard {shard}" if shard else ""))


def class_report(n: int, k: int, q: int = 2, shard: Optional[Tuple[int, int]] = None) -> CountReport:
    """Count enumerated classes per (m, r); comparable with counting.dimension"""
    report = CountReport(n, k, q)
    counts: Dict[Tuple[int, int], int] = {}
    for cls in enumerate_classes(n, k, q, shard):
        key = (cls.m, cls.half_rank)
        counts[key] = counts.get(key, 0) + 1
    report.counts = dict(sorted(counts.items()))
    return report


def gauge_fix(v: FMatrix, g: FMatrix) -> CommClass:
    """Gauge-fix an arbitrary (V, G) pair: V ↦ VA in echelon form, G ↦ A^{-1} G A^{-T}"""
    echelon, transform = column_echelon(v)
    m = rank(echelon)
    if m != v.cols:
        raise Infeasible(f"V of rank {m} with {v.cols} columns does not label a class")
    g2 = transform.inverse @ g @ transform.inverse.T
    return CommClass(v.rows, v.q, echelon, g2)


def reduced_basis(k: int, q: int = 2) -> List[Monomial]:
    """
    All canonical reduced monomials Ω(V, M) for k copies.

    V runs over the canonical even-subspace bases and M over the alternating phase matrices.
    For n ≥ k − 1 these span the commutant and are linearly independent.
    """
    q = check_prime(q)
    out = []
    for m in range(k):
        for v in even_subspaces(k, m, q):
            for g in alternating_graphs(m, q):
                out.append(Monomial(k, q, v, g))
    logger.info(f"reduced basis for k={k}, q={q} has {len(out)} monomials")
    return out
