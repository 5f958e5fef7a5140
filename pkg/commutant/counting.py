"""Exact dimension and orbit-size counting for the Clifford commutant"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from gf.linalg import rank
from gf.matrix import check_prime
from utils.errors import Infeasible
from utils.logging import get_logger


logger = get_logger(__name__)

LOWER_BOUND_FACTOR = 0.28
UPPER_BOUND_FACTOR = 20.3


def gaussian_binomial(n: int, k: int, q: int = 2) -> int:
    """Number of k-dimensional subspaces of F_q^n"""
    if k < 0 or k > n:
        return 0
    value = Fraction(1)
    for i in range(k):
        value *= Fraction(q ** (n - i) - 1, q ** (i + 1) - 1)
    return int(value)


def alternating_count(m: int, r: int, q: int = 2) -> int:
    """
    N_q(m, r): number of m×m alternating matrices of rank 2r over F_q
    (symmetric with zero diagonal for q=2, antisymmetric otherwise)
    """
    if r < 0 or 2 * r > m:
        return 0
    value = Fraction(1)
    for i in range(r):
        value *= Fraction(q ** (2 * i), q ** (2 * i + 2) - 1)
    for i in range(2 * r):
        value *= q ** (m - i) - 1
    return int(value)


@dataclass
class CountReport:
    """Class counts per (m, r) with their exact total"""

    n: int
    k: int
    q: int
    counts: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def by_order(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for (m, _), c in self.counts.items():
            out[m] = out.get(m, 0) + c
        return out


def dimension(n: int, k: int, q: int = 2) -> CountReport:
    """
    dim com(C_n^{⊗k}) = Σ_m Σ_{r ≥ max(m−n, 0)} binom(k−1, m)_q · N_q(m, r)

    Each term counts classes [V, G] with V an m-dimensional subspace of the zero-sum
    vectors and G an alternating graph of rank 2r realizable on n qudits.
    """
    q = check_prime(q)
    report = CountReport(n, k, q)
    for m in range(k):
        subspaces = gaussian_binomial(k - 1, m, q)
        for r in range(max(m - n, 0), m // 2 + 1):
            count = subspaces * alternating_count(m, r, q)
            if count:
                report.counts[(m, r)] = count
    return report


def closed_product(k: int, q: int = 2) -> int:
    """∏_{i=0}^{k−2} (q^i + 1), the dimension once n ≥ k − 1"""
    return math.prod(q ** i + 1 for i in range(k - 1))


def dimension_bounds(n: int, k: int) -> Tuple[float, float]:
    """
    Constant-factor envelope 0.28·2^e ≤ dim ≤ 20.3·2^e for q=2, where
    e = (k − 3/2)·m0 − m0²/2 and m0 = min(k − 1, 2n)
    """
    m0 = min(k - 1, 2 * n)
    scale = 2.0 ** ((k - 1.5) * m0 - m0 * m0 / 2)
    return LOWER_BOUND_FACTOR * scale, UPPER_BOUND_FACTOR * scale


def orbit_size(cls, n: int) -> int:
    """
    Number of ordered algebraically independent m-tuples of n-qudit Paulis whose
    anticommutation graph is cls.g

    Raises:
        Infeasible: if rank(g) < 2(m − n)
    """
    g = cls.g
    q = g.q
    m = g.rows
    r = rank(g) // 2
    if m - r > n:
        raise Infeasible(f"a graph of rank {2 * r} on {m} Paulis needs at least {m - r} qudits, got n={n}")
    size = 1
    for i in range(r):
        size *= (q ** (2 * (n - i)) - 1) * q ** (2 * (n - i) - 1)
    radical, free = m - 2 * r, n - r
    for i in range(radical):
        size *= q ** (2 * free - i) - q ** i
    return size


def mho_norm(cls, n: int) -> float:
    """2-norm of mho_I: sqrt(d^k / |S|)"""
    d = cls.q ** n
    return math.sqrt(d ** cls.k / orbit_size(cls, n))


def asymptotic_ratio(n: int, k: int) -> float:
    """dim / 2^{(k − 3/2)m0 − m0²/2}; stays within the constant factors of dimension_bounds"""
    m0 = min(k - 1, 2 * n)
    return dimension(n, k, 2).total / 2.0 ** ((k - 1.5) * m0 - m0 * m0 / 2)
