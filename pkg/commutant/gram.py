"""Gram matrices of the monomial basis and Clifford-Weingarten (pseudo-)inverses"""

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
import scipy.linalg

from commutant.counting import closed_product
from commutant.enumeration import reduced_basis
from config import settings
from monomial.model import Monomial
from monomial.moves import hs_exponent
from utils.errors import BadShape, IllConditioned
from utils.logging import get_logger


logger = get_logger(__name__)


@dataclass
class GramMatrix:
    """W_{Ω,Ω'} = tr(Ω†Ω') = d^{exponents[Ω, Ω']}, kept symbolic in d"""

    n: int
    k: int
    q: int
    basis: List[Monomial]
    exponents: np.ndarray

    @property
    def size(self) -> int:
        return len(self.basis)

    @property
    def d(self) -> int:
        return self.q ** self.n

    def numeric(self, d: Optional[float] = None) -> np.ndarray:
        d = self.d if d is None else d
        return np.power(float(d), self.exponents.astype(float))

    def exact(self, d: Optional[int] = None) -> List[List[int]]:
        """Integer entries at d"""
        d = self.d if d is None else d
        return [[d ** int(e) for e in row] for row in self.exponents]


def _gram_row(args) -> List[int]:
    basis, i = args
    return [hs_exponent(basis[i], basis[j]) for j in range(i, len(basis))]


def gram(
    n: int,
    k: int,
    q: int = 2,
    basis: Optional[Sequence[Monomial]] = None,
    workers: Optional[int] = None,
) -> GramMatrix:
    """
    Gram matrix of a reduced basis, assembled from monomial products alone

    Args:
        n: number of qudits; only fixes the default d
        k: number of copies
        q: prime local dimension
        basis: reduced monomials, the full reduced basis when omitted
        workers: process count for row assembly; the result does not depend on it
    """
    basis = list(basis) if basis is not None else reduced_basis(k, q)
    if any(b.k != k or b.q != q for b in basis):
        raise BadShape("basis monomials must share k and q with the Gram matrix")
    workers = workers or settings.workers
    size = len(basis)
    jobs = [(basis, i) for i in range(size)]
    if workers > 1 and size > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_gram_row, jobs, chunksize=max(1, size // (4 * workers))))
    else:
        rows = [_gram_row(job) for job in jobs]
    exponents = np.zeros((size, size), dtype=np.int64)
    for i, row in enumerate(rows):
        exponents[i, i:] = row
        exponents[i:, i] = row
    logger.info(f"assembled {size}x{size} Gram matrix for k={k}, q={q}")
    return GramMatrix(n, k, q, basis, exponents)


@dataclass
class WeingartenMatrix:
    """(Pseudo-)inverse of a Gram matrix evaluated at d"""

    entries: np.ndarray
    basis: List[Monomial]
    d: int
    pseudo_inverse: bool
    condition: float


def weingarten(
    g: GramMatrix,
    d: Optional[int] = None,
    rtol: Optional[float] = None,
    condition_bound: Optional[float] = None,
) -> WeingartenMatrix:
    """
    Clifford-Weingarten matrix W⁺ at d = q^n.

    The Gram matrix is divided by d^k before inverting. It is inverted exactly when it has
    full numerical rank; otherwise singular values below rtol·σ_max are dropped. An
    IllConditioned warning is emitted when the retained spectrum spans more than the bound.
    """
    d = g.d if d is None else d
    rtol = settings.pinv_rtol if rtol is None else rtol
    condition_bound = settings.condition_bound if condition_bound is None else condition_bound
    scale = float(d) ** g.k
    a = g.numeric(d) / scale
    if g.size == 0:
        return WeingartenMatrix(a, list(g.basis), d, False, 1.0)
    s = scipy.linalg.svdvals(a)
    kept = s[s > rtol * s[0]]
    condition = float(kept[0] / kept[-1])
    pseudo = len(kept) < g.size
    if pseudo:
        inverse = scipy.linalg.pinv(a, rtol=rtol)
        logger.info(f"Gram matrix at d={d} has rank {len(kept)} of {g.size}, using pseudo-inverse")
    else:
        inverse = scipy.linalg.inv(a)
    if condition > condition_bound:
        logger.warning(f"Gram matrix at d={d} has condition number {condition:.3e}")
        warnings.warn(f"condition number {condition:.3e} exceeds {condition_bound:.1e}", IllConditioned)
    return WeingartenMatrix(inverse / scale, list(g.basis), d, pseudo, condition)


def clifford_weingarten_bound(k: int, n: int) -> float:
    """Bound 6|P|²/d^{k+1} on |W⁺_{ΩΩ} − d^{-k}| for q=2"""
    d = 2 ** n
    return 6.0 * closed_product(k) ** 2 / float(d) ** (k + 1)
