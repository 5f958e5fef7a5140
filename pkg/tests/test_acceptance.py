"""Tests for the acceptance runner behind `commutant verify`"""

import numpy as np
import pytest

from acceptance import (
    TIERS,
    VERIFY,
    Check,
    is_balanced,
    pauli_tensors,
    run_tier,
    selected_checks,
    span_rank,
    tier_checks,
)
from config import settings
from pauli import parse_pauli
from utils.errors import BadShape


@pytest.mark.unit
def test_span_rank_counts_independent_vectors():
    """Test the streaming rank skips zero and dependent vectors"""
    e0, e1 = np.eye(3)[0], np.eye(3)[1]
    assert span_rank([]) == 0
    assert span_rank([np.zeros(3), e0, 2 * e0, e0 + 1j * e1, e1]) == 2
    assert span_rank(np.eye(4)) == 4


@pytest.mark.unit
def test_balanced_tensors():
    """Test the zero-sum filter on single-qubit four-copy tensors"""
    tensors = list(pauli_tensors(1, 4, balanced_only=True))
    assert len(tensors) == 4 ** 3
    assert all(is_balanced(t.copies()) for t in tensors)
    assert len({t.rows for t in tensors}) == len(tensors)
    assert not is_balanced([parse_pauli("X"), parse_pauli("I")])


@pytest.mark.unit
def test_heavy_checks_follow_the_slow_switch(monkeypatch):
    """Test heavy checks are dropped unless slow is requested"""
    quick = {c.name for c in selected_checks("dense", slow=False)}
    full = {c.name for c in selected_checks("dense", slow=True)}
    assert "twirl_rank_n2_k4" not in quick
    assert {"twirl_rank_n2_k4", "orthogonality_n2_k5", "basis_commutation_by_orbit_n2_k6"} <= full
    assert {"twirl_rank_n1_k4", "twirl_rank_n1_k5", "twirl_rank_n1_k3_q3", "orthogonality_n2_k4"} <= quick
    monkeypatch.setattr(settings, "slow_tests", True)
    assert {c.name for c in selected_checks("dense")} == full


@pytest.mark.unit
def test_tiers_cover_the_grids():
    """Test every tier is registered and check names are unique"""
    checks = tier_checks()
    assert set(checks) == set(TIERS) == set(VERIFY)
    names = [c.name for tier in TIERS for c in checks[tier]]
    assert len(names) == len(set(names))
    commutation = {c.name for c in checks["dense"] if c.name.startswith("mho_commutation")}
    assert commutation == {f"mho_commutation_n{n}_k{k}" for n in (1, 2) for k in range(2, 6)}
    basis = {c.name for c in checks["dense"] if c.name.startswith("basis_commutation")}
    assert len(basis) == 10


@pytest.mark.unit
def test_run_tier_reports_each_check():
    """Test a quick tier passes check by check"""
    assert run_tier("gf") == {"rank_nullity": True, "inverses": True}
    assert all(VERIFY["pauli"]().values())


@pytest.mark.unit
def test_run_tier_turns_domain_errors_into_failures(monkeypatch):
    """Test a check raising a domain error is reported as a failure"""
    def broken():
        raise BadShape("broken check")

    monkeypatch.setattr("acceptance.tier_checks", lambda: {"gf": [Check("broken", broken)]})
    assert run_tier("gf") == {"broken": False}
