"""Pydantic schemas for every JSON format the toolkit reads or writes"""

from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator

from commutant.counting import CountReport
from commutant.enumeration import CommClass
from commutant.gram import GramMatrix, WeingartenMatrix
from commutant.tables import ClassTable
from gf.matrix import FMatrix
from magic.report import MagicReport
from monomial.model import Monomial, monomial_from_text
from utils.errors import BadShape


# Monomial and class schemas
class MonomialSchema(BaseModel):
    """Ω(V, M) with V columns as digit strings and M as 1-based strictly-upper entries"""

    k: int = Field(..., ge=1, description="Number of tensor copies")
    q: int = Field(2, ge=2, description="Local dimension")
    V: List[str] = Field(default_factory=list, description="Columns of V, position 1 = copy 1")
    M: List[List[int]] = Field(
        default_factory=list,
        description="Phase entries [i, j] or [i, j, value] with i < j, 1-based",
    )

    @model_validator(mode="after")
    def check_shape(self):
        if any(len(c) != self.k for c in self.V):
            raise ValueError(f"every column must have {self.k} digits")
        m = len(self.V)
        for entry in self.M:
            if len(entry) not in (2, 3) or not 1 <= entry[0] < entry[1] <= m:
                raise ValueError(f"bad phase entry {entry} for m={m}")
        return self

    @classmethod
    def from_monomial(cls, mono: Monomial) -> "MonomialSchema":
        if mono.q == 2:
            entries = [[i, j] for i, j, _ in mono.phase_entries()]
        else:
            entries = [[i, j, int(c)] for i, j, c in mono.phase_entries()]
        return cls(k=mono.k, q=mono.q, V=mono.v.column_text(), M=entries)

    def to_monomial(self) -> Monomial:
        edges = [tuple(e) for e in self.M]
        return monomial_from_text(self.k, self.V, edges, self.q)


class ClassSchema(BaseModel):
    """Class label [V, G] of an mho operator"""

    k: int = Field(..., ge=1)
    q: int = Field(2, ge=2)
    m: int = Field(..., ge=0, description="Number of columns of V")
    V: List[str] = Field(default_factory=list)
    G: str = Field("", description="Anticommutation graph in the row/digit text encoding")

    @classmethod
    def from_class(cls, c: CommClass) -> "ClassSchema":
        return cls(k=c.k, q=c.q, m=c.m, V=c.v.column_text(), G=c.g.to_text())

    def to_class(self) -> CommClass:
        if len(self.V) != self.m:
            raise BadShape(f"class declares m={self.m} but lists {len(self.V)} columns")
        columns = [[int(ch, 36) for ch in c] for c in self.V]
        v = FMatrix.from_columns(columns, self.q, rows=self.k)
        g = FMatrix.from_text(self.G, self.q, cols=self.m) if self.m else FMatrix.zeros(0, 0, self.q)
        return CommClass(self.k, self.q, v, g)


# Counting schemas
class CountEntry(BaseModel):
    m: int
    r: int
    count: int


class CountReportSchema(BaseModel):
    """Class counts per (m, r) with exact totals"""

    n: int
    k: int
    q: int
    total: int
    by_order: Dict[int, int]
    counts: List[CountEntry]

    @classmethod
    def from_report(cls, report: CountReport) -> "CountReportSchema":
        entries = [CountEntry(m=m, r=r, count=c) for (m, r), c in sorted(report.counts.items())]
        return cls(
            n=report.n,
            k=report.k,
            q=report.q,
            total=report.total,
            by_order=dict(sorted(report.by_order().items())),
            counts=entries,
        )

    def csv_rows(self) -> List[List[str]]:
        return [["m", "r", "count"]] + [[str(e.m), str(e.r), str(e.count)] for e in self.counts]


# Gram and Weingarten exports
class GramExport(BaseModel):
    """Gram exponents tr(Ω†Ω') = d^{e}, with the basis ordering as header"""

    n: int
    k: int
    q: int
    basis: List[MonomialSchema]
    exponents: List[List[int]]

    @classmethod
    def from_gram(cls, g: GramMatrix) -> "GramExport":
        return cls(
            n=g.n,
            k=g.k,
            q=g.q,
            basis=[MonomialSchema.from_monomial(m) for m in g.basis],
            exponents=[[int(e) for e in row] for row in g.exponents],
        )


class WeingartenExport(BaseModel):
    """Clifford-Weingarten matrix with its inversion provenance"""

    n: int
    k: int
    q: int
    d: int
    pseudo_inverse: bool
    condition: float
    basis: List[MonomialSchema]
    entries: List[List[float]]

    @classmethod
    def from_weingarten(cls, w: WeingartenMatrix, n: int, k: int, q: int) -> "WeingartenExport":
        return cls(
            n=n,
            k=k,
            q=q,
            d=w.d,
            pseudo_inverse=w.pseudo_inverse,
            condition=w.condition,
            basis=[MonomialSchema.from_monomial(m) for m in w.basis],
            entries=[[float(x) for x in row] for row in w.entries],
        )


# Dense matrix schema
class MatrixSchema(BaseModel):
    """Row-major complex matrix {"dim", "re", "im"}"""

    dim: int = Field(..., ge=1)
    re: List[float]
    im: List[float]

    @model_validator(mode="after")
    def check_length(self):
        size = self.dim * self.dim
        if len(self.re) != size or len(self.im) != size:
            raise ValueError(f"a {self.dim}x{self.dim} matrix needs {size} real and imaginary parts")
        return self

    @classmethod
    def from_array(cls, a: np.ndarray) -> "MatrixSchema":
        a = np.asarray(a, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise BadShape(f"expected a square matrix, got shape {a.shape}")
        flat = a.reshape(-1)
        return cls(dim=a.shape[0], re=flat.real.tolist(), im=flat.imag.tolist())

    def to_array(self) -> np.ndarray:
        return (np.array(self.re) + 1j * np.array(self.im)).reshape(self.dim, self.dim)


# Class tables
class ClassRowSchema(BaseModel):
    label: str
    size: int
    representative: MonomialSchema


class ClassTableSchema(BaseModel):
    """Two-sided permutation orbits of the reduced basis"""

    k: int
    q: int
    n: Optional[int] = None
    total: int
    rows: List[ClassRowSchema]

    @classmethod
    def from_table(cls, table: ClassTable) -> "ClassTableSchema":
        rows = [
            ClassRowSchema(label=r.label, size=r.size, representative=MonomialSchema.from_monomial(r.representative))
            for r in table.rows
        ]
        return cls(k=table.k, q=table.q, n=table.n, total=table.total, rows=rows)

    def csv_rows(self) -> List[List[str]]:
        return [["label", "size", "V"]] + [[r.label, str(r.size), " ".join(r.representative.V)] for r in self.rows]


# Magic report
class MagicReportSchema(BaseModel):
    """Magic figures of one state plus provenance"""

    n: int
    label: Optional[str] = None
    seed: Optional[int] = None
    purities: Dict[int, float] = Field(..., description="Δ_{2α} keyed by α")
    entropies: Dict[int, float] = Field(..., description="M_α keyed by α")
    bell_magic: float = Field(..., ge=-1e-9, le=1 + 1e-9)
    success_probability: float
    generalized: Dict[str, float] = Field(default_factory=dict, description="Δ_Ω keyed by monomial")
    tolerance: float

    class Config:
        from_attributes = True

    @classmethod
    def from_report(cls, report: MagicReport) -> "MagicReportSchema":
        return cls.model_validate(report)
