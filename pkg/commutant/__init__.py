from commutant.counting import (
    CountReport,
    gaussian_binomial,
    alternating_count,
    dimension,
    closed_product,
    dimension_bounds,
    asymptotic_ratio,
    orbit_size,
    mho_norm,
)
from commutant.enumeration import (
    CommClass,
    even_subspaces,
    alternating_graphs,
    enumerate_classes,
    class_report,
    gauge_fix,
    reduced_basis,
)
from commutant.mho import MhoDescription, independent_tuples, mho_coefficients, class_of
from commutant.fourier import FourierTerm, fourier, inverse_fourier
from commutant.gram import GramMatrix, WeingartenMatrix, gram, weingarten, clifford_weingarten_bound
from commutant.tables import ClassRow, ClassTable, class_table, label_for, minimum_weight_basis

__all__ = [
    "CountReport",
    "gaussian_binomial",
    "alternating_count",
    "dimension",
    "closed_product",
    "dimension_bounds",
    "asymptotic_ratio",
    "orbit_size",
    "mho_norm",
    "CommClass",
    "even_subspaces",
    "alternating_graphs",
    "enumerate_classes",
    "class_report",
    "gauge_fix",
    "reduced_basis",
    "MhoDescription",
    "independent_tuples",
    "mho_coefficients",
    "class_of",
    "FourierTerm",
    "fourier",
    "inverse_fourier",
    "GramMatrix",
    "WeingartenMatrix",
    "gram",
    "weingarten",
    "clifford_weingarten_bound",
    "ClassRow",
    "ClassTable",
    "class_table",
    "label_for",
    "minimum_weight_basis",
]
