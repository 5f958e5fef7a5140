"""Pytest configuration and fixtures"""

import os

import numpy as np
import pytest


def pytest_collection_modifyitems(config, items):
    """Skip the slow tier unless COMMUTANT_SLOW_TESTS is set"""
    if os.environ.get("COMMUTANT_SLOW_TESTS", "").lower() in ("1", "true", "yes"):
        return
    skip_slow = pytest.mark.skip(reason="slow tier, set COMMUTANT_SLOW_TESTS=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    """Seeded generator so every run draws the same samples"""
    return np.random.default_rng(20240611)


@pytest.fixture
def t_state():
    """Single-qubit T-type magic state"""
    from dense.states import t_state

    return t_state(1)


@pytest.fixture
def zero_state():
    """Two-qubit |00>"""
    from dense.states import zero_state

    return zero_state(2)


@pytest.fixture
def omega4():
    """Primitive monomial on all four copies"""
    from monomial import primitive

    return primitive(4, (1, 1, 1, 1))


@pytest.fixture
def omega6():
    """Primitive monomial on all six copies"""
    from monomial import primitive

    return primitive(6, (1, 1, 1, 1, 1, 1))


@pytest.fixture
def omega44():
    """Two overlapping weight-four columns at k=6"""
    from monomial import named_monomial

    return named_monomial("Omega_44")


@pytest.fixture
def omega66():
    """Two overlapping weight-six columns at k=8"""
    from monomial import named_monomial

    return named_monomial("Omega_66")


@pytest.fixture
def random_monomial(rng):
    """Factory for random monomials with even columns and a random phase matrix"""
    from gf import FMatrix
    from monomial import Monomial

    def make(k, m, q=2):
        v = rng.integers(0, q, size=(k, m))
        v[-1] = (-v[:-1].sum(axis=0)) % q
        upper = np.triu(rng.integers(0, q, size=(m, m)), 1)
        phases = upper + upper.T if q == 2 else upper - upper.T
        return Monomial(k, q, FMatrix(v, q), FMatrix(phases, q))

    return make


@pytest.fixture
def random_gl(rng):
    """Factory for random invertible matrices"""
    from gf import FMatrix, GLTransform, rank

    def make(size, q=2):
        while True:
            a = FMatrix(rng.integers(0, q, size=(size, size)), q)
            if rank(a) == size:
                return GLTransform.from_matrix(a)

    return make
