"""Tests for the JSON schemas"""

import numpy as np
import pytest
from pydantic import ValidationError

from backend.schemas import (
    ClassSchema,
    ClassTableSchema,
    CountReportSchema,
    GramExport,
    MagicReportSchema,
    MatrixSchema,
    MonomialSchema,
    WeingartenExport,
)
from commutant import class_table, dimension, enumerate_classes, gram, weingarten
from dense import t_state
from magic import magic_report
from monomial import monomial_from_text, named_monomial


@pytest.mark.unit
def test_monomial_schema_round_trip():
    """Test named, phased and qutrit monomials survive the JSON form"""
    monomials = [
        named_monomial("Omega_44"),
        named_monomial("Omega_66"),
        monomial_from_text(4, ["1100", "0110"], [(1, 2)]),
        monomial_from_text(3, ["111", "120"], [(1, 2, 1)], q=3),
    ]
    for mono in monomials:
        schema = MonomialSchema.from_monomial(mono)
        again = MonomialSchema.model_validate_json(schema.model_dump_json())
        assert again.to_monomial() == mono


@pytest.mark.unit
def test_monomial_schema_layout():
    """Test the documented field layout"""
    schema = MonomialSchema.from_monomial(monomial_from_text(6, ["111100", "001111"], [(1, 2)]))
    assert schema.model_dump() == {"k": 6, "q": 2, "V": ["111100", "001111"], "M": [[1, 2]]}


@pytest.mark.unit
def test_monomial_schema_validation():
    """Test short columns and misplaced phase entries are rejected"""
    with pytest.raises(ValidationError):
        MonomialSchema(k=4, V=["110"])
    with pytest.raises(ValidationError):
        MonomialSchema(k=4, V=["1100", "0011"], M=[[2, 1]])
    with pytest.raises(ValidationError):
        MonomialSchema(k=4, V=["1100"], M=[[1, 2]])


@pytest.mark.unit
def test_class_schema_round_trip():
    """Test every class at (2, 4) survives the JSON form"""
    for c in enumerate_classes(2, 4):
        schema = ClassSchema.from_class(c)
        assert schema.m == c.m
        assert schema.to_class().key() == c.key()


@pytest.mark.unit
def test_count_report_schema():
    """Test dimension(1, 4) exports its total, orders and CSV rows"""
    schema = CountReportSchema.from_report(dimension(1, 4))
    assert schema.total == 15
    assert schema.by_order == {0: 1, 1: 7, 2: 7}
    rows = schema.csv_rows()
    assert rows[0] == ["m", "r", "count"]
    assert sum(int(r[2]) for r in rows[1:]) == 15


@pytest.mark.unit
def test_matrix_schema():
    """Test complex matrices and the length check"""
    a = np.array([[1, 2j], [-2j, 3]])
    schema = MatrixSchema.from_array(a)
    assert schema.dim == 2
    assert schema.re == [1.0, 0.0, 0.0, 3.0]
    assert np.array_equal(schema.to_array(), a)
    with pytest.raises(ValidationError):
        MatrixSchema(dim=2, re=[1.0], im=[0.0])


@pytest.mark.unit
def test_gram_and_weingarten_exports():
    """Test exports carry the basis ordering header"""
    g = gram(1, 2)
    export = GramExport.from_gram(g)
    assert (export.n, export.k, export.q) == (1, 2, 2)
    assert len(export.basis) == 2
    assert export.exponents == [[int(e) for e in row] for row in g.exponents]
    w = WeingartenExport.from_weingarten(weingarten(g), 1, 2, 2)
    assert w.d == 2 and not w.pseudo_inverse
    assert len(w.entries) == 2 and len(w.entries[0]) == 2


@pytest.mark.unit
def test_class_table_schema():
    """Test the k=4 table export"""
    schema = ClassTableSchema.from_table(class_table(4))
    assert schema.total == 30
    assert {r.label: r.size for r in schema.rows} == {"Omega_2": 24, "Omega_4": 6}
    assert len(schema.csv_rows()) == 3


@pytest.mark.unit
def test_magic_report_schema():
    """Test the report export keeps values and provenance"""
    schema = MagicReportSchema.from_report(magic_report(t_state(1)))
    assert schema.purities[2] == pytest.approx(0.75)
    assert schema.bell_magic == pytest.approx(0.5)
    assert schema.n == 1
    assert schema.tolerance > 0
