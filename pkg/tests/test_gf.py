"""Tests for linear algebra over prime fields"""

import itertools

import numpy as np
import pytest

from gf import (
    FMatrix,
    GLTransform,
    antisymmetric_canonical,
    canonical_block,
    check_prime,
    column_echelon,
    invert,
    nullspace,
    rank,
)
from gf.bitops import pack_rows, rank_words, rref_words, unpack_rows
from utils.errors import BadShape, NotPrime, SingularMatrix


def random_invertible(size, q, rng):
    while True:
        a = FMatrix(rng.integers(0, q, size=(size, size)), q)
        if rank(a) == size:
            return a


def span_size(m):
    """Number of distinct vectors in the column span, by exhaustive enumeration"""
    vectors = set()
    for coeffs in itertools.product(range(m.q), repeat=m.cols):
        vectors.add(tuple(np.mod(m.to_array() @ np.array(coeffs, dtype=np.int64), m.q)))
    return len(vectors)


@pytest.mark.unit
def test_rank_small_cases():
    """Test rank of identity and of equal rows"""
    assert rank(FMatrix.identity(2)) == 2
    assert rank(FMatrix.from_rows([[1, 1], [1, 1]])) == 1
    assert rank(FMatrix.zeros(3, 0)) == 0


@pytest.mark.unit
def test_rank_matches_span_enumeration(rng):
    """Test rank against the size of the spanned set for a dependent column"""
    cols = rng.integers(0, 2, size=(6, 2))
    while rank(FMatrix(cols)) < 2:
        cols = rng.integers(0, 2, size=(6, 2))
    m = FMatrix(np.column_stack([cols, cols[:, 0] ^ cols[:, 1]]))
    assert rank(m) == 2
    assert span_size(m) == 2 ** rank(m)


@pytest.mark.unit
def test_rank_over_f3_matches_span(rng):
    """Test rank over F_3 against span enumeration"""
    for _ in range(20):
        m = FMatrix(rng.integers(0, 3, size=(4, 3)), 3)
        assert span_size(m) == 3 ** rank(m)


@pytest.mark.unit
def test_word_kernels_agree_with_residue_elimination(rng):
    """Test packed GF(2) rank and rref against the matrix path"""
    for _ in range(50):
        m = FMatrix(rng.integers(0, 2, size=(5, 7)))
        assert rank_words(m.words) == rank(m)
        rows, pivots = rref_words(m.words, 7)
        assert len(pivots) == rank(m)
        assert all(rows[i] & (1 << c) for i, c in enumerate(pivots))


@pytest.mark.unit
def test_packed_words_are_built_with_the_matrix(rng):
    """Test q=2 matrices carry packed rows from construction and agree with the residues"""
    m = FMatrix.from_text("101/011")
    assert m._words == (0b101, 0b110)
    wide = FMatrix(rng.integers(0, 2, size=(3, 70)))
    rebuilt = FMatrix.from_row_words(wide.words, 70)
    assert rebuilt == wide and hash(rebuilt) == hash(wide)
    assert rebuilt.words == wide.words
    assert FMatrix.from_row_words([0b1111], 2) == FMatrix.from_text("11")
    assert pack_rows(np.zeros((2, 0), dtype=np.uint8)) == (0, 0)
    assert unpack_rows([0b10], 3).tolist() == [[0, 1, 0]]
    with pytest.raises(BadShape):
        FMatrix.identity(2, 3).words


@pytest.mark.unit
def test_column_echelon_identity_and_swap():
    """Test echelon form of the identity and of a permutation"""
    eye = FMatrix.identity(2)
    echelon, transform = column_echelon(eye)
    assert echelon == eye
    assert transform.matrix == eye

    swap = FMatrix.from_rows([[0, 1], [1, 0]])
    echelon, transform = column_echelon(swap)
    assert echelon == eye
    assert swap @ transform.matrix == echelon


@pytest.mark.unit
def test_column_echelon_rank_deficient(rng):
    """Test echelon of a random 8x4 rank-3 matrix"""
    while True:
        base = rng.integers(0, 2, size=(8, 3))
        if rank(FMatrix(base)) == 3:
            break
    m = FMatrix(np.column_stack([base, base[:, 0] ^ base[:, 2]]))
    echelon, transform = column_echelon(m)

    assert m @ transform.matrix == echelon
    nonzero = [j for j in range(4) if any(echelon.column(j))]
    assert nonzero == [0, 1, 2]
    assert span_size(echelon) == span_size(m)

    again, _ = column_echelon(echelon)
    assert again == echelon


@pytest.mark.unit
def test_column_echelon_pivots_are_topmost(rng):
    """Test pivots are ones, increase with the column index and clear their rows"""
    for q in (2, 3, 5):
        m = FMatrix(rng.integers(0, q, size=(6, 4)), q)
        echelon, _ = column_echelon(m)
        r = rank(m)
        pivots = [next(i for i in range(6) if echelon[i, j]) for j in range(r)]
        assert pivots == sorted(pivots)
        for j, p in enumerate(pivots):
            assert echelon[p, j] == 1
            assert [echelon[p, c] for c in range(4) if c != j] == [0, 0, 0]


@pytest.mark.unit
def test_rank_invariance_under_gl(rng):
    """Test rank is unchanged by invertible row and column operations"""
    for q in (2, 3):
        for _ in range(20):
            m = FMatrix(rng.integers(0, q, size=(5, 4)), q)
            a = random_invertible(4, q, rng)
            b = random_invertible(5, q, rng)
            assert rank(m @ a) == rank(m) == rank(b @ m)


@pytest.mark.unit
def test_invert_examples():
    """Test inverses of small matrices"""
    eye = FMatrix.identity(3)
    assert invert(eye) == eye

    involution = FMatrix.from_rows([[1, 1], [0, 1]])
    assert invert(involution) == involution

    m3 = FMatrix.from_rows([[1, 1], [1, 0]], q=3)
    assert m3 @ invert(m3) == FMatrix.identity(2, 3)


@pytest.mark.unit
def test_invert_errors():
    """Test singular and non-square inputs are rejected"""
    with pytest.raises(SingularMatrix):
        invert(FMatrix.from_rows([[1, 1], [1, 1]]))
    with pytest.raises(BadShape):
        invert(FMatrix.zeros(2, 3))


@pytest.mark.unit
def test_gl_transform_compose(rng):
    """Test composition keeps matrix and inverse in sync"""
    a = GLTransform.from_matrix(random_invertible(4, 3, rng))
    b = GLTransform.from_matrix(random_invertible(4, 3, rng))
    c = a.compose(b)
    assert c.matrix @ c.inverse == FMatrix.identity(4, 3)
    assert a.inverted().matrix == a.inverse
    with pytest.raises(BadShape):
        GLTransform(FMatrix.identity(2), FMatrix.from_rows([[1, 1], [0, 1]]))


@pytest.mark.unit
def test_nullspace(rng):
    """Test kernel vectors are annihilated and have the right count"""
    for q in (2, 3):
        m = FMatrix(rng.integers(0, q, size=(3, 6)), q)
        ns = nullspace(m)
        assert ns.cols == 6 - rank(m)
        assert (m @ ns).is_zero()
        assert rank(ns) == ns.cols


@pytest.mark.unit
def test_antisymmetric_canonical_examples():
    """Test the canonical form on small graphs"""
    transform, half = antisymmetric_canonical(FMatrix.zeros(3, 3))
    assert half == 0
    assert transform.matrix == FMatrix.identity(3)

    edge = FMatrix.from_rows([[0, 1], [1, 0]])
    transform, half = antisymmetric_canonical(edge)
    assert half == 1
    assert transform.matrix == FMatrix.identity(2)

    star = FMatrix.from_rows([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
    transform, half = antisymmetric_canonical(star)
    t = transform.matrix
    assert half == 1
    assert t.T @ star @ t == canonical_block(1, 3)


@pytest.mark.unit
def test_antisymmetric_canonical_random_graphs(rng):
    """Test canonical form on random F_2 graphs up to size 12"""
    for _ in range(200):
        size = int(rng.integers(1, 13))
        upper = np.triu(rng.integers(0, 2, size=(size, size)), 1)
        g = FMatrix(upper + upper.T)
        transform, half = antisymmetric_canonical(g)
        t = transform.matrix
        assert t.T @ g @ t == canonical_block(half, size)
        assert 2 * half == rank(g)


@pytest.mark.unit
def test_antisymmetric_canonical_qudit(rng):
    """Test canonical form for antisymmetric matrices over F_3 and F_5"""
    for q in (3, 5):
        for _ in range(30):
            size = int(rng.integers(1, 7))
            upper = np.triu(rng.integers(0, q, size=(size, size)), 1)
            g = FMatrix(upper - upper.T, q)
            transform, half = antisymmetric_canonical(g)
            t = transform.matrix
            assert t.T @ g @ t == canonical_block(half, size, q)
            assert 2 * half == rank(g)


@pytest.mark.unit
def test_antisymmetric_canonical_rejects_wrong_class():
    """Test BadShape for inputs outside the symmetry class"""
    with pytest.raises(BadShape):
        antisymmetric_canonical(FMatrix.from_rows([[0, 1], [0, 0]]))
    with pytest.raises(BadShape):
        antisymmetric_canonical(FMatrix.from_rows([[1, 0], [0, 0]]))
    with pytest.raises(BadShape):
        antisymmetric_canonical(FMatrix.from_rows([[0, 1], [1, 0]], q=3))
    with pytest.raises(BadShape):
        antisymmetric_canonical(FMatrix.zeros(2, 3))


@pytest.mark.unit
def test_text_encoding():
    """Test the row/digit text codec"""
    eye = FMatrix.from_text("10/01")
    assert eye == FMatrix.identity(2)
    assert eye.to_text() == "10/01"
    m = FMatrix.from_text("120/011", q=3)
    assert m.column_text() == ["10", "21", "01"]
    with pytest.raises(BadShape):
        FMatrix.from_text("10/1")
    with pytest.raises(BadShape):
        FMatrix.from_text("12", q=2)


@pytest.mark.unit
def test_check_prime():
    """Test prime moduli are accepted and others rejected"""
    assert check_prime(3) == 3
    for bad in (1, 4, 9, 257):
        with pytest.raises(NotPrime):
            check_prime(bad)
