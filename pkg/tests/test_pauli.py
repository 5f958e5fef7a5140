"""Tests for the Pauli and Weyl operator algebra"""

import numpy as np
import pytest

from dense.clifford import clifford_generators, identify_pauli
from dense.operators import dense_pauli
from gf import FMatrix, rank
from pauli import (
    PauliString,
    PauliTensor,
    Phase,
    anticomm_graph,
    chi,
    decompose_tensor,
    format_pauli,
    parse_pauli,
    parse_tensor,
    pauli_mul,
    pauli_power,
    recompose,
    sample_class_member,
)
from utils.errors import BadShape, Infeasible, ShapeMismatch


def random_pauli(rng, n, q=2):
    return PauliString(q, n, tuple(int(b) for b in rng.integers(0, q, size=2 * n)))


def random_tensor(rng, n, k, q=2):
    copies = [random_pauli(rng, n, q) for _ in range(k)]
    return PauliTensor.from_copies(copies, Phase(int(rng.integers(0, 2 * q)), q))


@pytest.mark.unit
def test_pauli_mul_examples():
    """Test products with the identity, an involution and X·Z"""
    x, z = parse_pauli("X"), parse_pauli("Z")
    r, phase = pauli_mul(x, PauliString.identity(1))
    assert r == x and phase == Phase.one()

    r, phase = pauli_mul(x, x)
    assert r.is_identity() and phase == Phase.one()

    r, phase = pauli_mul(x, z)
    assert format_pauli(r) == "Y"
    assert phase.value == -1j


@pytest.mark.unit
def test_pauli_mul_rejects_mismatch():
    """Test ShapeMismatch across different n or q"""
    with pytest.raises(ShapeMismatch):
        pauli_mul(PauliString.identity(1), PauliString.identity(2))
    with pytest.raises(ShapeMismatch):
        pauli_mul(PauliString.identity(1), PauliString.identity(1, 3))


@pytest.mark.integration
@pytest.mark.parametrize("q", [2, 3])
def test_pauli_mul_matches_dense(rng, q):
    """Test products and phases against explicit matrices"""
    for _ in range(300):
        n = int(rng.integers(1, 3))
        p, r = random_pauli(rng, n, q), random_pauli(rng, n, q)
        prod, phase = pauli_mul(p, r)
        lhs = dense_pauli(p).matrix @ dense_pauli(r).matrix
        assert np.allclose(lhs, phase.value * dense_pauli(prod).matrix, atol=1e-12)


@pytest.mark.unit
@pytest.mark.parametrize("q", [2, 3])
def test_pauli_mul_associative_phases(rng, q):
    """Test the two bracketings of a triple product carry the same phase"""
    for _ in range(300):
        a, b, c = (random_pauli(rng, 2, q) for _ in range(3))
        ab, p1 = pauli_mul(a, b)
        left, p2 = pauli_mul(ab, c)
        bc, p3 = pauli_mul(b, c)
        right, p4 = pauli_mul(a, bc)
        assert left == right
        assert p1 * p2 == p3 * p4


@pytest.mark.unit
def test_pauli_power_order():
    """Test W^q is the identity up to an exact phase"""
    for q in (2, 3, 5):
        p = PauliString.from_xz([1, 2 % q], [1, 1], q)
        r, phase = pauli_power(p, q)
        assert r.is_identity()
        expected = dense_pauli(p).matrix
        assert np.allclose(np.linalg.matrix_power(expected, q), phase.value * np.eye(q ** 2))


@pytest.mark.unit
def test_chi_examples(rng):
    """Test commutation characters of standard pairs and multiplicativity"""
    assert chi(parse_pauli("X"), parse_pauli("Z")).value == -1
    assert chi(parse_pauli("XZ"), parse_pauli("ZX")).value == 1
    assert chi(parse_pauli("XY"), PauliString.identity(2)).value == 1

    for q in (2, 3):
        for _ in range(200):
            p, a, b = (random_pauli(rng, 2, q) for _ in range(3))
            ab, _ = pauli_mul(a, b)
            assert chi(p, ab) == chi(p, a) * chi(p, b)


@pytest.mark.integration
def test_chi_matches_group_commutator(rng):
    """Test χ(P,R) = tr(P R P† R†)/d"""
    for q in (2, 3):
        for _ in range(50):
            p, r = random_pauli(rng, 2, q), random_pauli(rng, 2, q)
            mp, mr = dense_pauli(p).matrix, dense_pauli(r).matrix
            value = np.trace(mp @ mr @ mp.conj().T @ mr.conj().T) / q ** 2
            assert np.isclose(value, chi(p, r).value)


@pytest.mark.unit
def test_anticomm_graph_examples():
    """Test graphs of small Pauli lists"""
    g = anticomm_graph([parse_pauli("X"), parse_pauli("Z")]).g
    assert g == FMatrix.from_rows([[0, 1], [1, 0]])

    g = anticomm_graph([parse_pauli("XI"), parse_pauli("ZI"), parse_pauli("IZ")]).g
    assert g == FMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 0]])

    assert anticomm_graph([]).g.shape == (0, 0)


@pytest.mark.unit
def test_anticomm_graph_qudit_is_antisymmetric(rng):
    """Test qudit graphs are antisymmetric and record P_i P_j = ω^g P_j P_i"""
    ps = [random_pauli(rng, 2, 3) for _ in range(4)]
    g = anticomm_graph(ps).g
    assert g.is_antisymmetric()
    for i in range(4):
        for j in range(4):
            assert chi(ps[i], ps[j]) == Phase(2 * g[i, j], 3)


@pytest.mark.integration
def test_anticomm_graph_clifford_invariant(rng):
    """Test graphs survive conjugation of every Pauli by one Clifford"""
    ps = [random_pauli(rng, 2) for _ in range(4)]
    before = anticomm_graph(ps).g
    for gate in clifford_generators(2):
        u = gate.matrix
        moved = [identify_pauli(u @ dense_pauli(p).matrix @ u.conj().T, 2)[0] for p in ps]
        assert anticomm_graph(moved).g == before


@pytest.mark.unit
def test_decompose_examples():
    """Test decompositions of XXXX, the identity and YXZI"""
    v, paulis, phase = decompose_tensor(parse_tensor("X|X|X|X"))
    assert v == FMatrix.from_columns([(1, 1, 1, 1)])
    assert [format_pauli(p) for p in paulis] == ["X"]
    assert phase == Phase.one()

    v, paulis, phase = decompose_tensor(PauliTensor.identity(2, 4))
    assert v.cols == 0 and paulis == []

    t = parse_tensor("Y|X|Z|I")
    v, paulis, phase = decompose_tensor(t)
    assert v.cols == 2
    assert recompose(v, paulis, phase) == t


@pytest.mark.unit
@pytest.mark.parametrize("q", [2, 3])
def test_decompose_recompose_roundtrip(rng, q):
    """Test recomposition reproduces random tensors exactly, phase included"""
    for _ in range(300):
        n = int(rng.integers(1, 4))
        k = int(rng.integers(1, 9 if q == 2 else 5))
        t = random_tensor(rng, n, k, q)
        v, paulis, phase = decompose_tensor(t)
        assert v.cols == rank(t.rows)
        assert rank(v) == v.cols
        assert rank(FMatrix.from_rows([p.bits for p in paulis], q, cols=2 * n)) == v.cols
        assert recompose(v, paulis, phase, n=n) == t


@pytest.mark.integration
def test_decompose_matches_dense(rng):
    """Test the recomposed operator equals the dense input"""
    for _ in range(30):
        t = random_tensor(rng, 1, 4)
        v, paulis, phase = decompose_tensor(t)
        rebuilt = recompose(v, paulis, phase, n=1)
        assert np.allclose(dense_pauli(rebuilt).matrix, dense_pauli(t).matrix)


@pytest.mark.unit
def test_sample_class_member_examples():
    """Test sampled members for the smallest graphs"""
    (p,) = sample_class_member(FMatrix.zeros(1, 1), 1)
    assert not p.is_identity()

    ps = sample_class_member(FMatrix.from_rows([[0, 1], [1, 0]]), 1)
    assert [format_pauli(p) for p in ps] == ["X", "Z"]


@pytest.mark.unit
def test_sample_class_member_random_graphs(rng):
    """Test sampled Paulis are independent and realize the requested graph"""
    for q in (2, 3):
        for _ in range(100):
            m = int(rng.integers(1, 6))
            upper = np.triu(rng.integers(0, q, size=(m, m)), 1)
            g = FMatrix(upper + upper.T if q == 2 else upper - upper.T, q)
            n = m - rank(g) // 2
            ps = sample_class_member(g, n)
            assert anticomm_graph(ps).g == g
            assert rank(FMatrix.from_rows([p.bits for p in ps], q, cols=2 * n)) == m


@pytest.mark.unit
def test_sample_class_member_infeasible():
    """Test the rank condition is enforced"""
    with pytest.raises(Infeasible):
        sample_class_member(FMatrix.zeros(3, 3), 2)


@pytest.mark.unit
def test_literals():
    """Test Pauli literal parsing and formatting"""
    t = parse_tensor("XX|ZI|YY")
    assert (t.k, t.n) == (3, 2)
    assert str(t) == "XX|ZI|YY"
    p = parse_pauli("X1Z2X0Z1", q=3)
    assert p.bits == (1, 2, 0, 1)
    assert format_pauli(p) == "X1Z2X0Z1"
    with pytest.raises(BadShape):
        parse_pauli("XQ")
    with pytest.raises(BadShape):
        parse_pauli("X3Z0", q=3)
