"""Tests for the mho_I basis and the Ω ↔ mho change of basis"""

import numpy as np
import pytest

from acceptance import basis_commutes_by_orbit, mho_orthogonal, mho_overlaps
from commutant import (
    CommClass,
    class_of,
    enumerate_classes,
    fourier,
    independent_tuples,
    inverse_fourier,
    mho_coefficients,
    orbit_size,
    reduced_basis,
)
from dense import commutes_with_clifford, dense_graph_monomial, dense_mho, dense_monomial
from gf import FMatrix, rank
from monomial import Monomial, monomial_from_text
from pauli import anticomm_graph, parse_tensor
from utils.errors import BadShape, Infeasible


def make_class(k, columns, graph=""):
    v = FMatrix.from_columns(columns, rows=k)
    g = FMatrix.from_text(graph) if graph else FMatrix.zeros(v.cols, v.cols)
    return CommClass(k, 2, v, g)


@pytest.mark.unit
def test_identity_class():
    """Test m=0 describes the identity with weight 1"""
    cls = make_class(4, [])
    description = mho_coefficients(cls, 1)
    terms = list(description.terms())
    assert description.size == 1
    assert len(terms) == 1
    t, phase = terms[0]
    assert all(c.is_identity() for c in t.copies())
    assert phase.exponent == 0


@pytest.mark.unit
def test_single_column_terms():
    """Test v=(1,1,1,1) at n=1 gives X, Y, Z tensor powers with φ = +1"""
    description = mho_coefficients(make_class(4, [(1, 1, 1, 1)]), 1)
    terms = list(description)
    assert description.size == 3
    assert description.weight == pytest.approx(1 / 3)
    assert len(terms) == 3
    for t, phase in terms:
        copies = t.copies()
        assert len({c.bits for c in copies}) == 1
        assert not copies[0].is_identity()
        assert phase.exponent == 0


@pytest.mark.unit
@pytest.mark.parametrize("n,k", [(1, 4), (2, 4), (1, 5), (1, 6)])
def test_term_counts_match_orbit_size(n, k):
    """Test every class lists exactly |S| distinct terms"""
    for cls in enumerate_classes(n, k):
        description = mho_coefficients(cls, n)
        keys = {t.rows.to_text() for t, _ in description.terms()}
        assert len(keys) == description.size == orbit_size(cls, n)


@pytest.mark.unit
def test_independent_tuples_respect_graph():
    """Test sampled tuples are independent with the requested graph"""
    g = FMatrix.from_text("011/100/100")
    tuples = list(independent_tuples(g, 2))
    assert tuples
    for paulis in tuples:
        assert anticomm_graph(paulis).g.to_text() == g.to_text()
        assert rank(FMatrix.from_rows([p.bits for p in paulis], cols=4)) == 3


@pytest.mark.unit
def test_infeasible_class():
    """Test a commuting pair cannot be described on one qubit"""
    with pytest.raises(Infeasible):
        mho_coefficients(make_class(4, [(1, 1, 0, 0), (0, 1, 1, 0)]), 1)


@pytest.mark.unit
def test_class_of_round_trip():
    """Test class_of recovers the class and φ of every term"""
    for cls in enumerate_classes(1, 4):
        for t, phase in mho_coefficients(cls, 1).terms():
            found, phi = class_of(t)
            assert found.key() == cls.key()
            assert phi == phase


@pytest.mark.unit
def test_class_of_odd_column():
    """Test tensors with an odd column have no class"""
    assert class_of(parse_tensor("X|I|I|I")) is None


@pytest.mark.integration
@pytest.mark.parametrize(
    "n,k",
    [(1, 4), (2, 2), (2, 3), (2, 4), pytest.param(2, 5, marks=pytest.mark.slow)],
)
def test_mho_orthogonality(n, k):
    """Test tr(mho_I† mho_I') = δ d^k/|S|"""
    classes, overlaps = mho_overlaps(n, k)
    d = 2 ** n
    for i, j in np.ndindex(*overlaps.shape):
        expected = d ** k / orbit_size(classes[i], n) if i == j else 0.0
        assert abs(overlaps[i, j] - expected) <= 1e-8 * max(1.0, abs(expected))


@pytest.mark.unit
def test_mho_overlaps_chunking_is_invisible():
    """Test the overlap matrix does not depend on the block size"""
    _, whole = mho_overlaps(2, 4, chunk=64)
    _, blocks = mho_overlaps(2, 4, chunk=7)
    assert np.allclose(whole, blocks, atol=1e-12)
    assert mho_orthogonal(2, 3)


@pytest.mark.integration
@pytest.mark.parametrize(
    "n,k",
    [(n, k) for n in (1, 2) for k in range(2, 5)] + [(1, 5), pytest.param(2, 5, marks=pytest.mark.slow)],
)
def test_mho_commutes_with_clifford(n, k):
    """Test every mho_I commutes with generator tensor powers"""
    for cls in enumerate_classes(n, k):
        assert commutes_with_clifford(dense_mho(cls, n), tol=1e-10)


@pytest.mark.integration
@pytest.mark.parametrize(
    "n,k",
    [(n, k) for n in (1, 2) for k in range(2, 5)]
    + [(1, 5), (1, 6), pytest.param(2, 5, marks=pytest.mark.slow)],
)
def test_reduced_basis_commutes_with_clifford(n, k):
    """Test every reduced basis monomial commutes with generator tensor powers"""
    for mono in reduced_basis(k):
        assert commutes_with_clifford(dense_monomial(mono, n), tol=1e-10)


@pytest.mark.integration
def test_reduced_basis_sample_commutes_two_qubits_k6():
    """Test a seeded sample of the 4590 six-copy basis monomials at n=2"""
    basis = reduced_basis(6)
    picks = np.random.default_rng(7).choice(len(basis), size=12, replace=False)
    for i in picks:
        assert commutes_with_clifford(dense_monomial(basis[int(i)], 2), tol=1e-10)


@pytest.mark.slow
@pytest.mark.integration
def test_reduced_basis_commutes_two_qubits_k6_by_orbit():
    """Test the k=6 orbit representatives and copy swaps commute, covering the whole basis"""
    assert basis_commutes_by_orbit(2, 6)



@pytest.mark.unit
def test_fourier_trivial_cases():
    """Test the one-column expansion has a single unit coefficient"""
    terms = fourier(monomial_from_text(4, ["1111"]))
    assert len(terms) == 1
    assert terms[0].value == pytest.approx(1.0)
    assert len(fourier(monomial_from_text(4, []))) == 1


@pytest.mark.integration
@pytest.mark.parametrize(
    "k,columns,n",
    [(4, ["1100", "0110"], 2), (6, ["111100", "001111"], 1), (6, ["110000", "011000", "001100"], 1)],
)
def test_fourier_against_dense(k, columns, n):
    """Test Ω(V, M) = Σ_G ω^{M·G} mho(V, G) and the inverse transform"""
    v = FMatrix.from_columns([tuple(int(c) for c in col) for col in columns], rows=k)
    m = v.cols
    mho = {}
    for term in fourier(Monomial(k, 2, v, FMatrix.zeros(m, m))):
        mho[term.label.to_text()] = dense_graph_monomial(v, term.label, n).matrix
    for g_text, expected in mho.items():
        g = FMatrix.from_text(g_text, cols=m)
        total = np.zeros_like(expected)
        for term in inverse_fourier(v, g):
            total += term.value * dense_monomial(term.label, n).matrix
        assert np.allclose(total, expected, atol=1e-10)
    for term in inverse_fourier(v, FMatrix.zeros(m, m)):
        mono = term.label
        total = sum(t.value * mho[t.label.to_text()] for t in fourier(mono))
        assert np.allclose(total, dense_monomial(mono, n).matrix, atol=1e-10)


@pytest.mark.unit
def test_inverse_fourier_shape_check():
    """Test BadShape for a graph of the wrong size"""
    v = FMatrix.from_columns([(1, 1, 0, 0)], rows=4)
    with pytest.raises(BadShape):
        inverse_fourier(v, FMatrix.zeros(2, 2))
