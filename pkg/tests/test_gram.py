"""Tests for Gram matrices, Clifford-Weingarten inverses and class tables"""

import warnings

import numpy as np
import pytest

from commutant import (
    class_table,
    clifford_weingarten_bound,
    gram,
    label_for,
    reduced_basis,
    weingarten,
)
from dense import gram_dense
from monomial import identity_monomial, named_monomial, primitive, transposition
from utils.errors import BadShape, IllConditioned


@pytest.mark.unit
def test_k2_gram():
    """Test the k=2 Gram matrix [[d², d], [d, d²]]"""
    for n in (1, 2, 3):
        d = 2 ** n
        g = gram(n, 2)
        assert g.exact() == [[d * d, d], [d, d * d]]


@pytest.mark.unit
def test_gram_diagonal_is_d_to_k():
    """Test tr(Ω†Ω) = d^k for every reduced monomial"""
    g = gram(2, 4)
    assert np.all(np.diag(g.exponents) == 4)
    assert np.array_equal(g.exponents, g.exponents.T)


@pytest.mark.unit
def test_gram_rejects_foreign_basis():
    """Test BadShape when the basis has a different k"""
    with pytest.raises(BadShape):
        gram(1, 4, basis=[identity_monomial(3)])


@pytest.mark.unit
def test_gram_workers_agree():
    """Test the process pool gives the serial result"""
    serial = gram(1, 4, workers=1)
    pooled = gram(1, 4, workers=2)
    assert np.array_equal(serial.exponents, pooled.exponents)


@pytest.mark.integration
def test_gram_matches_dense():
    """Test the symbolic k=4 Gram matrix against dense inner products at n=2"""
    g = gram(2, 4)
    dense = gram_dense(g.basis, 2)
    assert np.allclose(dense, g.numeric(), atol=1e-8)


@pytest.mark.unit
def test_k2_weingarten_closed_form():
    """Test W⁺ = (1/(d²−1))[[1, −1/d], [−1/d, 1]]"""
    for n in (1, 2):
        d = 2 ** n
        w = weingarten(gram(n, 2))
        expected = np.array([[1, -1 / d], [-1 / d, 1]]) / (d * d - 1)
        assert np.allclose(w.entries, expected, atol=1e-12)
        assert not w.pseudo_inverse


@pytest.mark.unit
def test_weingarten_pseudo_inverse_below_saturation():
    """Test the n=1, k=4 Gram matrix is singular and pseudo-inverted"""
    g = gram(1, 4)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IllConditioned)
        w = weingarten(g)
    assert w.pseudo_inverse
    a = g.numeric()
    assert np.allclose(a @ w.entries @ a, a, atol=1e-6 * np.max(a))


@pytest.mark.unit
def test_weingarten_condition_warning():
    """Test IllConditioned is emitted above the condition bound"""
    with pytest.warns(IllConditioned):
        weingarten(gram(1, 2), condition_bound=1.0)


@pytest.mark.unit
def test_weingarten_diagonal_asymptotics():
    """Test |W⁺_ΩΩ − d^{-k}| ≤ 6|P|²/d^{k+1} at k=4, n=11"""
    n, k = 11, 4
    w = weingarten(gram(n, k))
    d = 2 ** n
    bound = clifford_weingarten_bound(k, n)
    deviation = np.abs(np.diag(w.entries) - d ** -float(k))
    assert np.all(deviation <= bound)


@pytest.mark.unit
def test_labels():
    """Test orbit labels from the lowest-weight column basis"""
    assert label_for(identity_monomial(4)) == "Omega_2"
    assert label_for(transposition(4, 0, 1)) == "Omega_2"
    assert label_for(named_monomial("Omega_44")) == "Omega_44"
    assert label_for(primitive(6, (1, 1, 1, 1, 1, 1))) == "Omega_6"


@pytest.mark.unit
def test_class_table_small_k():
    """Test the k=4 and k=5 tables split into permutations and Ω_4"""
    assert class_table(4).sizes() == {"Omega_2": 24, "Omega_4": 6}
    assert class_table(5).sizes() == {"Omega_2": 120, "Omega_4": 150}


@pytest.mark.unit
def test_class_table_records_n():
    """Test the orbit sizes do not depend on n, which only tags the table"""
    tagged = class_table(5, 3)
    assert tagged.n == 3
    assert tagged.sizes() == class_table(5).sizes()
    assert class_table(5).n is None
    with pytest.raises(BadShape):
        class_table(5, 0)


@pytest.mark.unit
def test_class_table_k6():
    """Test the k=6 table (720, 2700, 720, 450)"""
    table = class_table(6)
    assert table.sizes() == {"Omega_2": 720, "Omega_4": 2700, "Omega_6": 720, "Omega_44": 450}
    assert table.total == 4590
    assert table.orbit_of(named_monomial("Omega_44")) == "Omega_44"
    assert table.orbit_of(transposition(6, 2, 5)) == "Omega_2"
    assert sum(len(row.members) for row in table.rows) == len(reduced_basis(6))


@pytest.mark.slow
def test_class_table_k8():
    """Test the k=8 table covers all 9 845 550 basis monomials"""
    table = class_table(8)
    assert table.total == 9845550
    assert len(table.rows) == 13
