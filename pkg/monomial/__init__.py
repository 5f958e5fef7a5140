from monomial.model import (
    Monomial,
    LambdaMatrix,
    check_phase_matrix,
    phase_matrix,
    monomial_from_columns,
    monomial_from_text,
    identity_monomial,
    primitive,
    transposition,
    transposition_factors,
    permutation_monomial,
    named_monomial,
    lambda_matrix,
    decode_lambda,
)
from monomial.moves import (
    ReductionResult,
    apply_gl,
    add_column,
    swap_columns,
    reduce,
    concatenate,
    multiply,
    monomial_power,
    adjoint,
    trace_exponent,
    hs_exponent,
    canonical,
    canonical_key,
)
from monomial.normal_form import NormalForm, normal_form, recombine, order, classify

__all__ = [
    "Monomial",
    "LambdaMatrix",
    "check_phase_matrix",
    "phase_matrix",
    "monomial_from_columns",
    "monomial_from_text",
    "identity_monomial",
    "primitive",
    "transposition",
    "transposition_factors",
    "permutation_monomial",
    "named_monomial",
    "lambda_matrix",
    "decode_lambda",
    "ReductionResult",
    "apply_gl",
    "add_column",
    "swap_columns",
    "reduce",
    "concatenate",
    "multiply",
    "monomial_power",
    "adjoint",
    "trace_exponent",
    "hs_exponent",
    "canonical",
    "canonical_key",
    "NormalForm",
    "normal_form",
    "recombine",
    "order",
    "classify",
]
