from dense.operators import (
    DenseOperator,
    check_cap,
    weyl,
    pauli_matrix,
    dense_pauli,
    copy_major_order,
    single_qudit_monomial,
    dense_monomial,
    dense_monomial_direct,
    permutation_operator,
    symmetric_projector,
    kron_copies,
    tensor_power,
)
from dense.clifford import (
    clifford_generators,
    identify_pauli,
    is_clifford,
    clifford_closure,
    commutes_with_clifford,
)
from dense.states import (
    StateVector,
    density,
    from_amplitudes,
    zero_state,
    plus_state,
    t_state,
    random_state,
    apply_random_clifford,
)
from dense.twirl import (
    pauli_coefficients,
    from_pauli_coefficients,
    classification_table,
    exact_twirl,
    dense_mho,
    dense_graph_monomial,
    gram_dense,
    weingarten_twirl,
)
from dense.haar import (
    HaarGram,
    haar_gram,
    haar_weingarten,
    haar_twirl,
    haar_state_twirl,
    symmetric_dimension,
    average_purity,
    twirled_purity,
    otoc_average,
    haar_pauli_correlator,
    six_point_otoc,
)

__all__ = [
    "DenseOperator",
    "check_cap",
    "weyl",
    "pauli_matrix",
    "dense_pauli",
    "copy_major_order",
    "single_qudit_monomial",
    "dense_monomial",
    "dense_monomial_direct",
    "permutation_operator",
    "symmetric_projector",
    "kron_copies",
    "tensor_power",
    "clifford_generators",
    "identify_pauli",
    "is_clifford",
    "clifford_closure",
    "commutes_with_clifford",
    "StateVector",
    "density",
    "from_amplitudes",
    "zero_state",
    "plus_state",
    "t_state",
    "random_state",
    "apply_random_clifford",
    "pauli_coefficients",
    "from_pauli_coefficients",
    "classification_table",
    "exact_twirl",
    "dense_mho",
    "dense_graph_monomial",
    "gram_dense",
    "weingarten_twirl",
    "HaarGram",
    "haar_gram",
    "haar_weingarten",
    "haar_twirl",
    "haar_state_twirl",
    "symmetric_dimension",
    "average_purity",
    "twirled_purity",
    "otoc_average",
    "haar_pauli_correlator",
    "six_point_otoc",
]
