from magic.purities import (
    PauliFrame,
    pauli_frame,
    expectation_table,
    stabilizer_purity,
    stabilizer_entropy,
    monomial_expectation,
    generalized_purity,
    triple_purity,
    haar_average_purity,
    haar_purity_constant,
)
from magic.bell import (
    commutation_signs,
    bell_magic_distribution,
    bell_magic,
    bell_magic_direct,
    bell_magic_bounds,
    testing_success,
    omega_tester_acceptance,
)
from magic.orbit import (
    OrbitDecomposition,
    orbit_overlaps,
    state_orbit,
    state_orbit_general,
    orbit_weight_k4,
    orbit_weight_k5,
    orbit_trace_distance_k4,
    stabilizer_orbit_normalization,
)
from magic.report import MagicReport, magic_report

__all__ = [
    "PauliFrame",
    "pauli_frame",
    "expectation_table",
    "stabilizer_purity",
    "stabilizer_entropy",
    "monomial_expectation",
    "generalized_purity",
    "triple_purity",
    "haar_average_purity",
    "haar_purity_constant",
    "commutation_signs",
    "bell_magic_distribution",
    "bell_magic",
    "bell_magic_direct",
    "bell_magic_bounds",
    "testing_success",
    "omega_tester_acceptance",
    "OrbitDecomposition",
    "orbit_overlaps",
    "state_orbit",
    "state_orbit_general",
    "orbit_weight_k4",
    "orbit_weight_k5",
    "orbit_trace_distance_k4",
    "stabilizer_orbit_normalization",
    "MagicReport",
    "magic_report",
]
