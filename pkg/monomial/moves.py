"""Column moves, reduction, products and traces of Pauli monomials"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from gf.linalg import column_echelon, rank
from gf.matrix import FMatrix, GLTransform
from monomial.model import LambdaMatrix, Monomial, decode_lambda, identity_monomial, lambda_matrix
from utils.errors import IndexOutOfRange, ShapeMismatch
from utils.logging import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class ReductionResult:
    """original = d^dpower · reduced; beta counts the absorbed dependencies"""

    reduced: Monomial
    dpower: int = 0
    beta: int = 0


def apply_gl(mono: Monomial, a: Union[GLTransform, FMatrix]) -> Monomial:
    """
    Rewrite Ω(V, M) as Ω(VA, M') for invertible A, leaving the operator unchanged.

    M' is read off Λ' = A^T Λ A.

    Raises:
        ShapeMismatch: if A is not m×m over the monomial's field
    """
    matrix = a.matrix if isinstance(a, GLTransform) else a
    if matrix.shape != (mono.m, mono.m) or matrix.q != mono.q:
        raise ShapeMismatch(f"GL move of shape {matrix.shape} does not fit m={mono.m}")
    if mono.m == 0:
        return mono
    lam = lambda_matrix(mono).lam
    moved = LambdaMatrix(matrix.T @ lam @ matrix)
    return Monomial(mono.k, mono.q, mono.v @ matrix, decode_lambda(moved))


def _check_index(mono: Monomial, *idx: int) -> None:
    for i in idx:
        if not 0 <= i < mono.m:
            raise IndexOutOfRange(f"column {i} out of range for m={mono.m}")


def add_column(mono: Monomial, target: int, source: int, coeff: int = 1) -> Monomial:
    """v_target += coeff · v_source with the matching phase update"""
    _check_index(mono, target, source)
    if target == source:
        raise IndexOutOfRange("cannot add a column to itself")
    a = np.eye(mono.m, dtype=np.int64)
    a[source, target] = coeff
    return apply_gl(mono, FMatrix(a, mono.q))


def swap_columns(mono: Monomial, i: int, j: int) -> Monomial:
    """Exchange columns i and j with the matching phase update"""
    _check_index(mono, i, j)
    perm = list(range(mono.m))
    perm[i], perm[j] = perm[j], perm[i]
    return apply_gl(mono, FMatrix(np.eye(mono.m, dtype=np.int64)[:, perm], mono.q))


def remove_columns(mono: Monomial, cols) -> Monomial:
    keep = [j for j in range(mono.m) if j not in set(cols)]
    return Monomial(mono.k, mono.q, mono.v.take_columns(keep), mono.phases.submatrix(keep, keep))


def reduce(mono: Monomial) -> ReductionResult:
    """
    Remove linear dependencies among the columns of V.

    A zero column without phases contributes a factor d. A zero column z carrying phases
    is first isolated onto its rightmost partner s by adding s to the other partners; the
    sum over P_z then forces P_s = 1 and both columns drop out.
    """
    dpower = beta = 0
    current = mono
    q = mono.q
    while current.m:
        r = rank(current.v)
        if r == current.m:
            break
        _, transform = column_echelon(current.v)
        current = apply_gl(current, transform)
        z = r
        row = [current.phases[z, j] for j in range(current.m)]
        partners = [j for j, c in enumerate(row) if c]
        if not partners:
            current = remove_columns(current, [z])
            dpower += 1
            beta += 1
            continue
        s = partners[-1]
        inv = pow(int(row[s]), -1, q)
        a = np.eye(current.m, dtype=np.int64)
        for j in partners[:-1]:
            a[s, j] = (-row[j] * inv) % q
        current = apply_gl(current, FMatrix(a, q))
        current = remove_columns(current, [z, s])
        beta += 1
        logger.debug(f"absorbed phased zero column {z} through column {s}")
    return ReductionResult(current, dpower, beta)


def concatenate(a: Monomial, b: Monomial) -> Monomial:
    """Ω([V_a | V_b], M_a ⊕ M_b) = Ω_a · Ω_b without reduction"""
    if (a.k, a.q) != (b.k, b.q):
        raise ShapeMismatch(f"cannot multiply monomials with (k, q) = {(a.k, a.q)} and {(b.k, b.q)}")
    if a.m == 0:
        return b
    if b.m == 0:
        return a
    return Monomial(a.k, a.q, FMatrix.hstack([a.v, b.v]), FMatrix.block_diag(a.phases, b.phases))


def multiply(a: Monomial, b: Monomial) -> ReductionResult:
    """Ω_a · Ω_b = d^α Ω_reduced"""
    return reduce(concatenate(a, b))


def monomial_power(mono: Monomial, e: int) -> ReductionResult:
    result = ReductionResult(identity_monomial(mono.k, mono.q))
    for _ in range(e):
        step = multiply(result.reduced, mono)
        result = ReductionResult(step.reduced, result.dpower + step.dpower, result.beta + step.beta)
    return result


def adjoint(mono: Monomial) -> Monomial:
    """Ω† = Ω(VR, R M^T R) with R reversing the column order"""
    rev = list(range(mono.m))[::-1]
    return Monomial(mono.k, mono.q, mono.v.take_columns(rev), mono.phases.T.submatrix(rev, rev))


def trace_exponent(mono: Monomial) -> int:
    """tr Ω = d^{k − m + 2β}"""
    return mono.k - mono.m + 2 * reduce(mono).beta


def hs_exponent(a: Monomial, b: Monomial) -> int:
    """tr(Ω_a† Ω_b) = d^{hs_exponent}"""
    return trace_exponent(concatenate(adjoint(a), b))


def canonical(mono: Monomial) -> Monomial:
    """
    Gauge-fixed representative: the reduced monomial with V in reduced column-echelon form.

    The scalar d^α dropped by reduce is not part of the representative.
    """
    reduced = reduce(mono).reduced
    if reduced.m == 0:
        return reduced
    _, transform = column_echelon(reduced.v)
    return apply_gl(reduced, transform)


def canonical_key(mono: Monomial) -> Tuple[int, int, str, str]:
    return canonical(mono).key()
