"""Error hierarchy shared by every toolkit package"""


class CommutantError(Exception):
    """Base class of all domain errors raised by the toolkit"""

    code = "CommutantError"

    def __init__(self, message: str = ""):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return f"{self.code}: {self.message}" if self.message else self.code


class ShapeMismatch(CommutantError, ValueError):
    """Operands disagree in field, size or copy number"""

    code = "ShapeMismatch"


class BadShape(CommutantError, ValueError):
    """Input violates the required shape or symmetry class"""

    code = "BadShape"


class NotPrime(CommutantError, ValueError):
    code = "NotPrime"


class SingularMatrix(CommutantError, ValueError):
    code = "SingularMatrix"


class OddColumn(CommutantError, ValueError):
    """A monomial column has entry sum different from zero mod q"""

    code = "OddColumn"


class IndexOutOfRange(CommutantError, IndexError):
    code = "IndexOutOfRange"


class Infeasible(CommutantError, ValueError):
    """A class cannot be realized on the requested number of qudits"""

    code = "Infeasible"


class TooLarge(CommutantError):
    """A dense construction would exceed the configured dimension cap"""

    code = "TooLarge"


class UnsupportedK(CommutantError, ValueError):
    code = "UnsupportedK"


class RewriteError(CommutantError):
    """The rewriting engine could not bring a monomial to the requested form"""

    code = "RewriteError"


class IllConditioned(UserWarning):
    """Emitted when a Gram matrix is too ill conditioned for a reliable inverse"""
