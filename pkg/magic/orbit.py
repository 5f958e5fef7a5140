"""
Clifford orbits of pure states: Φ_cl(ψ^{⊗k}) = Σ_R p_R Π R Π / tr(Π R)

R runs over one representative per two-sided permutation orbit of the reduced basis.
The weights p_R are quasi-probabilities: they sum to one but may be negative.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np
import sympy
from scipy import linalg

from commutant.tables import ClassTable, class_table
from dense.operators import DenseOperator, dense_monomial, symmetric_projector
from dense.states import StateVector
from magic.purities import expectation_table, monomial_expectation, stabilizer_purity
from monomial.model import Monomial
from monomial.moves import concatenate, trace_exponent
from utils.errors import ShapeMismatch, UnsupportedK
from utils.logging import get_logger


logger = get_logger(__name__)

CLOSED_FORM_K = (4, 5, 6)


@dataclass
class OrbitDecomposition:
    """Quasi-probabilities of a state's Clifford orbit over symmetrized representatives"""

    k: int
    d: int
    labels: List[str]
    representatives: List[Monomial] = field(repr=False)
    weights: np.ndarray
    traces: List[Fraction] = field(repr=False)

    def total(self) -> float:
        return float(np.sum(self.weights))

    def as_dict(self) -> Dict[str, float]:
        return {label: float(w) for label, w in zip(self.labels, self.weights)}

    def reconstruct(self, n: int) -> DenseOperator:
        """Σ_R p_R Π R Π / tr(Π R) as a dense k-copy operator"""
        if 2 ** n != self.d:
            raise ShapeMismatch(f"decomposition was computed at d={self.d}, not n={n}")
        proj = symmetric_projector(self.k, n)
        out = np.zeros_like(proj.matrix)
        for rep, trace, w in zip(self.representatives, self.traces, self.weights):
            sym = proj.matrix @ dense_monomial(rep, n).matrix @ proj.matrix
            out += (w / float(trace)) * sym
        return DenseOperator(out, n, self.k, 2)


@lru_cache(maxsize=16)
def orbit_overlaps(k: int, d: int) -> Tuple[List[List[Fraction]], List[Fraction]]:
    """
    Exact S_{RR'} = tr(Π R Π R') / (tr(Π R) tr(Π R')) and tr(Π R) for the class table at k

    Averages over T_σ R T_π equal averages over the orbit of R, so every trace is a sum of
    powers of d from the monomial trace rule.
    """
    table = class_table(k)
    traces = [
        Fraction(sum(d ** trace_exponent(m) for m in row.members), row.size) for row in table.rows
    ]
    size = len(table.rows)
    s = [[Fraction(0)] * size for _ in range(size)]
    for i, left in enumerate(table.rows):
        for j, right in enumerate(table.rows):
            if j < i:
                s[i][j] = s[j][i]
                continue
            joint = Fraction(
                sum(d ** trace_exponent(concatenate(left.representative, m)) for m in right.members),
                right.size,
            )
            s[i][j] = joint / (traces[i] * traces[j])
    logger.debug(f"orbit overlap matrix for k={k}, d={d}: {size} representatives")
    return s, traces


def _solve(s: List[List[Fraction]], y: np.ndarray) -> np.ndarray:
    exact = sympy.Matrix(s)
    if exact.rank() == exact.rows:
        inverse = np.array(exact.inv().evalf(), dtype=float)
        return inverse @ y
    logger.info(f"orbit overlap matrix has rank {exact.rank()} < {exact.rows}; using the pseudo-inverse")
    return linalg.pinv(np.array(exact.evalf(), dtype=float)) @ y


def state_orbit_general(state: StateVector, k: int, table: Optional[ClassTable] = None) -> OrbitDecomposition:
    """
    p_R = Σ_{R'} (S⁻¹)_{RR'} tr(R' ψ^{⊗k}) / tr(Π R') for any k

    When the symmetrized representatives are linearly dependent (small d) the
    minimum-norm weights are returned; they still reproduce the orbit.
    """
    table = class_table(k, state.n) if table is None else table
    d = state.dim
    s, traces = orbit_overlaps(k, d)
    expectations = expectation_table(state)
    y = np.array(
        [
            np.real(monomial_expectation(state, row.representative, expectations)) / float(t)
            for row, t in zip(table.rows, traces)
        ]
    )
    weights = _solve(s, y)
    return OrbitDecomposition(
        k, d, [r.label for r in table.rows], [r.representative for r in table.rows], weights, traces
    )


def orbit_weight_k4(delta4: float, d: int) -> float:
    """Weight of Π_sym/tr Π_sym in the four-copy orbit: (d+3)(d−Δ_4)/((d+4)(d−1))"""
    return (d + 3) * (d - delta4) / ((d + 4) * (d - 1))


def orbit_weight_k5(delta4: float, d: int) -> float:
    """Weight of Π_sym/tr Π_sym in the five-copy orbit: (d+3)(d+4−5Δ_4)/((d+8)(d−1))"""
    return (d + 3) * (d + 4 - 5 * delta4) / ((d + 8) * (d - 1))


def state_orbit(state: StateVector, k: int) -> OrbitDecomposition:
    """
    Orbit quasi-probabilities for k ∈ {4, 5, 6}; closed forms in Δ_4 below six copies

    Raises:
        UnsupportedK: for any other k
    """
    if k not in CLOSED_FORM_K:
        raise UnsupportedK(f"closed-form orbits exist for k in {CLOSED_FORM_K}, got {k}")
    if k == 6:
        return state_orbit_general(state, k)
    table = class_table(k, state.n)
    d = state.dim
    _, traces = orbit_overlaps(k, d)
    delta4 = stabilizer_purity(state, 2)
    p = orbit_weight_k4(delta4, d) if k == 4 else orbit_weight_k5(delta4, d)
    weights = np.array([p, 1.0 - p])
    return OrbitDecomposition(
        k, d, [r.label for r in table.rows], [r.representative for r in table.rows], weights, traces
    )


def orbit_trace_distance_k4(state: StateVector) -> float:
    """‖Φ_cl(ψ^{⊗4}) − Φ_haar(ψ^{⊗4})‖_1 = 2|(d+3)Δ_4 − 4| / (d(d+3))"""
    d = state.dim
    delta4 = stabilizer_purity(state, 2)
    return 2.0 * abs((d + 3) * delta4 - 4.0) / (d * (d + 3))


def stabilizer_orbit_normalization(k: int, d: int) -> int:
    """Z with Φ_cl(|0⟩⟨0|^{⊗k}) = (1/Z) Σ_{Ω ∈ P} Ω: d ∏_{i=0}^{k−2} (d + 2^i)"""
    return d * math.prod(d + 2 ** i for i in range(k - 1))
