"""
Change of basis between Pauli monomials Ω(V, M) and graph-based monomials mho(V, G).

mho(V, G) = d^{-m} Σ_{P : graph(P) = G} P_1^{⊗v_1} ⋯ P_m^{⊗v_m} sums over every tuple with the
given graph, dependent ones included, so the two families are related by a character sum
over the strictly-upper entries:

    Ω(V, M)   = Σ_G ω^{Σ_{i<j} M_ij G_ij} mho(V, G)
    mho(V, G) = q^{-m(m-1)/2} Σ_M ω^{-Σ_{i<j} M_ij G_ij} Ω(V, M)
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from commutant.enumeration import alternating_graphs
from gf.matrix import FMatrix
from monomial.model import Monomial
from pauli.strings import Phase
from utils.errors import BadShape


@dataclass(frozen=True)
class FourierTerm:
    """scale · phase attached to one basis element"""

    label: object
    phase: Phase
    scale: Fraction = Fraction(1)

    @property
    def value(self) -> complex:
        return complex(self.phase.value) * float(self.scale)


def _pairing(m: FMatrix, g: FMatrix) -> int:
    return sum(int(m[i, j]) * int(g[i, j]) for i in range(m.rows) for j in range(i + 1, m.rows))


def fourier(mono: Monomial) -> List[FourierTerm]:
    """Expand Ω(V, M) over the graph-based monomials mho(V, G); labels are the graphs G"""
    q = mono.q
    return [FourierTerm(g, Phase(2 * _pairing(mono.phases, g), q)) for g in alternating_graphs(mono.m, q)]


def inverse_fourier(v: FMatrix, g: FMatrix) -> List[FourierTerm]:
    """
    Expand mho(V, G) over the Pauli monomials Ω(V, M); labels are Monomials

    Raises:
        BadShape: if G does not match V's column count
    """
    q, m = v.q, v.cols
    if g.shape != (m, m):
        raise BadShape(f"graph of shape {g.shape} does not fit {m} columns")
    scale = Fraction(1, q ** (m * (m - 1) // 2))
    return [
        FourierTerm(Monomial(v.rows, q, v, phases), Phase(-2 * _pairing(phases, g), q), scale)
        for phases in alternating_graphs(m, q)
    ]
