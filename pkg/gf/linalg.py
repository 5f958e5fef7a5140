"""Rank, echelon forms, inverses, kernels and congruence canonical forms over F_q"""

from typing import List, Tuple

import numpy as np

from gf.bitops import pack_rows, rank_words, rref_words, unpack_rows
from gf.matrix import FMatrix, GLTransform
from utils.errors import BadShape, SingularMatrix
from utils.logging import get_logger


logger = get_logger(__name__)


def _rref(a: np.ndarray, q: int, limit: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form of an int64 array mod q, pivoting in the first `limit` columns"""
    a = np.mod(a.copy(), q)
    rows = a.shape[0]
    pivots: List[int] = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = np.mod(a[r] * pow(int(a[r, c]), -1, q), q)
        factors = a[:, c].copy()
        factors[r] = 0
        a = np.mod(a - np.outer(factors, a[r]), q)
        pivots.append(c)
        r += 1
    return a, pivots


def _rref_field(a: np.ndarray, q: int, limit: int) -> Tuple[np.ndarray, List[int]]:
    if q != 2:
        return _rref(a, q, limit)
    cols = a.shape[1]
    reduced, pivots = rref_words(pack_rows(np.mod(a, 2)), limit)
    return unpack_rows(reduced, cols).astype(a.dtype), pivots


def rank(m: FMatrix) -> int:
    """Number of linearly independent columns of m over F_q"""
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.q == 2:
        return rank_words(m.words)
    _, pivots = _rref(m.to_array(), m.q, m.cols)
    return len(pivots)


def column_echelon(m: FMatrix) -> Tuple[FMatrix, GLTransform]:
    """
    Reduced column-echelon form of m.

    Column j of the echelon form has its pivot (a 1) in row p_j with p_0 < p_1 < ...,
    zeros above the pivot and zeros in every other pivot row; the trailing columns are zero.
    Pivots are taken topmost row first, which fixes one representative per column space.

    Returns:
        (echelon, transform) with echelon = m @ transform.matrix
    """
    q = m.q
    rows, cols = m.shape
    aug = np.hstack([m.to_array().T, np.eye(cols, dtype=np.int64)]) if rows else np.eye(cols, dtype=np.int64)
    reduced, _ = _rref_field(aug, q, rows)
    echelon = FMatrix(reduced[:, :rows].T, q) if rows else FMatrix.zeros(0, cols, q)
    transform = FMatrix(reduced[:, rows:].T, q)
    return echelon, GLTransform.from_matrix(transform)


def invert(m: FMatrix) -> FMatrix:
    """
    Inverse of a square matrix over F_q

    Raises:
        BadShape: if m is not square
        SingularMatrix: if rank(m) is below its size
    """
    if not m.is_square():
        raise BadShape(f"cannot invert a {m.rows}x{m.cols} matrix")
    size = m.rows
    if size == 0:
        return m
    aug = np.hstack([m.to_array(), np.eye(size, dtype=np.int64)])
    reduced, pivots = _rref_field(aug, m.q, size)
    if len(pivots) < size:
        raise SingularMatrix(f"matrix of size {size} has rank {len(pivots)}")
    return FMatrix(reduced[:, size:], m.q)


def nullspace(m: FMatrix) -> FMatrix:
    """Basis of {x : m x = 0} as the columns of the returned matrix"""
    echelon, transform = column_echelon(m)
    r = rank(echelon)
    return transform.matrix.take_columns(range(r, m.cols))


def antisymmetric_canonical(g: FMatrix) -> Tuple[GLTransform, int]:
    """
    Congruence canonical form of an alternating matrix.

    For q=2 g must be symmetric with zero diagonal, for odd q antisymmetric. The transform T
    satisfies T^T g T = [[0,1],[-1,0]] (+) ... (+) [[0,1],[-1,0]] (+) 0, with half_rank blocks.

    Returns:
        (transform, half_rank)

    Raises:
        BadShape: if g is not square or not in the required symmetry class
    """
    q = g.q
    if not g.is_square():
        raise BadShape(f"graph matrix must be square, got {g.shape}")
    a = g.to_array()
    if q == 2:
        if not g.is_symmetric() or np.any(np.diag(a) % 2):
            raise BadShape("F_2 graph matrix must be symmetric with zero diagonal")
    elif not g.is_antisymmetric():
        raise BadShape(f"F_{q} graph matrix must be antisymmetric")

    size = g.rows

    def form(x: np.ndarray, y: np.ndarray) -> int:
        return int(x @ a @ y) % q

    remaining = [np.eye(size, dtype=np.int64)[:, j] for j in range(size)]
    pairs: List[Tuple[np.ndarray, np.ndarray]] = []
    while True:
        found = None
        for i, e in enumerate(remaining):
            for j, f in enumerate(remaining):
                if j != i and form(e, f):
                    found = (i, j)
                    break
            if found:
                break
        if found is None:
            break
        i, j = found
        e = remaining[i]
        f = np.mod(remaining[j] * pow(form(e, remaining[j]), -1, q), q)
        rest = [x for t, x in enumerate(remaining) if t not in (i, j)]
        # project the rest onto the form-orthogonal complement of span(e, f)
        remaining = [np.mod(x - form(x, f) * e + form(x, e) * f, q) for x in rest]
        pairs.append((e, f))

    columns = [v for pair in pairs for v in pair] + remaining
    transform = FMatrix(np.array(columns, dtype=np.int64).T.reshape(size, size), q)
    logger.debug(f"canonical form of {size}x{size} graph: half rank {len(pairs)}")
    return GLTransform.from_matrix(transform), len(pairs)


def canonical_block(half_rank: int, size: int, q: int = 2) -> FMatrix:
    """The block-diagonal alternating matrix that antisymmetric_canonical targets"""
    out = np.zeros((size, size), dtype=np.int64)
    for i in range(half_rank):
        out[2 * i, 2 * i + 1] = 1
        out[2 * i + 1, 2 * i] = q - 1
    return FMatrix(out, q)
