from pauli.strings import (
    Phase,
    PauliString,
    tau_exponent,
    symplectic,
    pauli_mul,
    pauli_power,
    chi,
    all_paulis,
    parse_pauli,
    format_pauli,
)
from pauli.tensor import (
    PauliTensor,
    AnticommGraph,
    parse_tensor,
    anticomm_graph,
    recompose,
    decompose_tensor,
    canonical_paulis,
    sample_class_member,
    phi_phase,
)

__all__ = [
    "Phase",
    "PauliString",
    "tau_exponent",
    "symplectic",
    "pauli_mul",
    "pauli_power",
    "chi",
    "all_paulis",
    "parse_pauli",
    "format_pauli",
    "PauliTensor",
    "AnticommGraph",
    "parse_tensor",
    "anticomm_graph",
    "recompose",
    "decompose_tensor",
    "canonical_paulis",
    "sample_class_member",
    "phi_phase",
]
