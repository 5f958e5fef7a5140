from utils.logging import setup_logging, get_logger
from utils.errors import (
    CommutantError,
    ShapeMismatch,
    BadShape,
    NotPrime,
    SingularMatrix,
    OddColumn,
    IndexOutOfRange,
    Infeasible,
    TooLarge,
    UnsupportedK,
    RewriteError,
    IllConditioned,
)

__all__ = [
    "setup_logging",
    "get_logger",
    "CommutantError",
    "ShapeMismatch",
    "BadShape",
    "NotPrime",
    "SingularMatrix",
    "OddColumn",
    "IndexOutOfRange",
    "Infeasible",
    "TooLarge",
    "UnsupportedK",
    "RewriteError",
    "IllConditioned",
]
