from gf.matrix import FMatrix, GLTransform, check_prime
from gf.linalg import (
    rank,
    column_echelon,
    invert,
    nullspace,
    antisymmetric_canonical,
    canonical_block,
)

__all__ = [
    "FMatrix",
    "GLTransform",
    "check_prime",
    "rank",
    "column_echelon",
    "invert",
    "nullspace",
    "antisymmetric_canonical",
    "canonical_block",
]
