"""Tests for the projective/unitary normal form"""

import numpy as np
import pytest

from commutant import reduced_basis
from dense.operators import dense_monomial
from monomial import (
    canonical,
    classify,
    identity_monomial,
    monomial_from_text,
    multiply,
    normal_form,
    recombine,
)


def check_factorization(mono, nf, n=1):
    d = mono.q ** n
    product = dense_monomial(nf.projective, n).matrix @ dense_monomial(nf.unitary, n).matrix
    assert np.allclose(dense_monomial(mono, n).matrix, d ** nf.dpower * product, atol=1e-10)


def check_parts(nf):
    for j, w in enumerate(nf.projective.column_weights()):
        assert (w // 2) % 2 == 0
        for i in range(j):
            assert int(np.dot(nf.projective.v.column(i), nf.projective.v.column(j))) % 2 == 0
    for w in nf.unitary.column_weights():
        assert (w // 2) % 2 == 1
    assert not nf.projective.has_phases()
    assert not nf.unitary.has_phases()


@pytest.mark.unit
def test_primitive_normal_forms(omega4, omega6):
    """Test Ω_4 is purely projective and Ω_6 purely unitary"""
    nf = normal_form(omega4)
    assert canonical(nf.projective) == canonical(omega4)
    assert nf.unitary.m == 0

    nf = normal_form(omega6)
    assert nf.projective.m == 0
    assert canonical(nf.unitary) == canonical(omega6)


@pytest.mark.unit
def test_identity_normal_form():
    """Test the identity has two empty parts and is classified unitary"""
    nf = normal_form(identity_monomial(4))
    assert nf.projective.m == 0 and nf.unitary.m == 0
    assert classify(identity_monomial(4)) == "unitary"


@pytest.mark.integration
def test_phased_commuting_pair_becomes_four_odd_columns():
    """Test two commuting even columns joined by a phase rewrite to four odd columns"""
    mono = monomial_from_text(6, ["111100", "001111"], [(1, 2)])
    nf = normal_form(mono)
    assert nf.projective.m == 0
    assert nf.unitary.m == 4
    assert nf.extensions
    check_parts(nf)
    check_factorization(mono, nf, 1)
    check_factorization(mono, nf, 2)
    assert classify(mono) == "unitary"


@pytest.mark.integration
def test_random_normal_forms(random_monomial, rng):
    """Test factorization and part structure for random monomials"""
    for _ in range(40):
        k = int(rng.integers(2, 7))
        mono = random_monomial(k, int(rng.integers(1, min(k, 4))))
        nf = normal_form(mono)
        check_parts(nf)
        check_factorization(mono, nf)


@pytest.mark.integration
def test_qutrit_normal_forms(random_monomial, rng):
    """Test factorization for q=3 monomials"""
    for _ in range(15):
        k = int(rng.integers(2, 5))
        mono = random_monomial(k, int(rng.integers(1, 3)), 3)
        nf = normal_form(mono)
        assert not nf.projective.has_phases() and not nf.unitary.has_phases()
        check_factorization(mono, nf)


@pytest.mark.unit
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_recombination_reproduces_basis(k):
    """Test projective · unitary multiplies back to every reduced basis monomial"""
    for mono in reduced_basis(k):
        nf = normal_form(mono)
        product = multiply(nf.projective, nf.unitary)
        assert canonical(product.reduced) == canonical(mono)
        assert product.dpower == nf.dpower == 0


@pytest.mark.slow
def test_recombination_reproduces_basis_k6():
    """Test the recombination at k=6"""
    for mono in reduced_basis(6):
        nf = normal_form(mono)
        assert canonical(multiply(nf.projective, nf.unitary).reduced) == canonical(mono)


@pytest.mark.unit
def test_normal_form_idempotent(random_monomial):
    """Test the normal form of a recombined normal form has the same parts"""
    for _ in range(20):
        mono = random_monomial(5, 2)
        nf = normal_form(mono)
        again = normal_form(recombine(nf))
        assert canonical(multiply(again.projective, again.unitary).reduced) == canonical(
            multiply(nf.projective, nf.unitary).reduced
        )
