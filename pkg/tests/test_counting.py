"""Tests for exact dimension and orbit-size counting"""

import math

import pytest

from commutant import (
    CommClass,
    alternating_count,
    asymptotic_ratio,
    closed_product,
    dimension,
    dimension_bounds,
    gaussian_binomial,
    mho_norm,
    orbit_size,
)
from gf import FMatrix
from utils.errors import Infeasible


DIMENSION_LADDER = [1, 2, 6, 30, 270, 4590, 151470, 9845550]


def single_class(k, columns, graph="", q=2):
    v = FMatrix.from_columns(columns, q, rows=k)
    m = v.cols
    g = FMatrix.from_text(graph, q, cols=m) if graph else FMatrix.zeros(m, m, q)
    return CommClass(k, q, v, g)


@pytest.mark.unit
def test_gaussian_binomial_small_values():
    """Test subspace counts against hand-counted values"""
    assert gaussian_binomial(3, 1) == 7
    assert gaussian_binomial(3, 2) == 7
    assert gaussian_binomial(4, 2) == 35
    assert gaussian_binomial(4, 0) == 1
    assert gaussian_binomial(2, 3) == 0
    assert gaussian_binomial(2, 1, q=3) == 4


@pytest.mark.unit
def test_alternating_count_partitions_all_graphs():
    """Test N_q(m, r) summed over r counts every alternating matrix"""
    for q in (2, 3):
        for m in range(6):
            total = sum(alternating_count(m, r, q) for r in range(m // 2 + 1))
            assert total == q ** (m * (m - 1) // 2)
    assert alternating_count(2, 1) == 1
    assert alternating_count(3, 1) == 7


@pytest.mark.unit
def test_dimension_ladder():
    """Test dim for n ≥ k − 1 reproduces 1, 2, 6, 30, 270, 4590, 151470, 9845550"""
    for k, expected in enumerate(DIMENSION_LADDER, start=1):
        report = dimension(max(k - 1, 1), k)
        assert report.total == expected
        assert closed_product(k) == expected


@pytest.mark.unit
def test_dimension_saturates_in_n():
    """Test adding qudits beyond k − 1 does not change the dimension"""
    for k in range(2, 8):
        assert dimension(k - 1, k).total == dimension(k + 3, k).total


@pytest.mark.unit
def test_dimension_below_saturation():
    """Test the single-qubit four-copy dimension is 15"""
    report = dimension(1, 4)
    assert report.total == 15
    assert report.by_order() == {0: 1, 1: 7, 2: 7}


@pytest.mark.unit
def test_dimension_qutrit_closed_product():
    """Test the qudit dimension equals ∏(q^i + 1) once n ≥ k − 1"""
    for k in range(2, 6):
        assert dimension(k - 1, k, q=3).total == closed_product(k, q=3)


@pytest.mark.unit
def test_dimension_bounds_hold_exactly():
    """Test 0.28·2^e ≤ dim ≤ 20.3·2^e for k ≤ 10"""
    for k in range(2, 11):
        for n in range(1, 6):
            low, high = dimension_bounds(n, k)
            total = dimension(n, k).total
            assert low <= total <= high
    assert asymptotic_ratio(2, 6) == pytest.approx(2295 / 2 ** 10)


@pytest.mark.unit
def test_orbit_size_examples():
    """Test |S| for single Paulis and anticommuting pairs"""
    single = single_class(4, [(1, 1, 1, 1)])
    assert orbit_size(single, 1) == 3
    assert orbit_size(single, 2) == 15
    pair = single_class(4, [(1, 1, 0, 0), (0, 1, 1, 0)], "01/10")
    assert orbit_size(pair, 1) == 6


@pytest.mark.unit
def test_orbit_size_infeasible():
    """Test Infeasible when a commuting pair needs a second qubit"""
    pair = single_class(4, [(1, 1, 0, 0), (0, 1, 1, 0)])
    with pytest.raises(Infeasible):
        orbit_size(pair, 1)
    assert orbit_size(pair, 2) == 15 * 6


@pytest.mark.unit
def test_mho_norm():
    """Test the 2-norm sqrt(d^k/|S|)"""
    single = single_class(4, [(1, 1, 1, 1)])
    assert mho_norm(single, 1) == pytest.approx(math.sqrt(16 / 3))
