"""Immutable matrices over prime fields F_q and invertible transforms between them"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from gf.bitops import pack_rows, unpack_rows
from utils.errors import NotPrime, ShapeMismatch, BadShape


@lru_cache(maxsize=64)
def check_prime(q: int) -> int:
    """Return q if it is a prime small enough for byte residues, raise NotPrime otherwise"""
    if not isinstance(q, (int, np.integer)) or q < 2 or q > 251 or not isprime(int(q)):
        raise NotPrime(f"field modulus must be a prime below 256, got {q}")
    return int(q)


class FMatrix:
    """
    Matrix over F_q.

    For q=2 the rows are packed into Python ints (bit j of a word is the entry in column j)
    when the matrix is built. Rank, echelon forms and the GF(2) kernels in gf.bitops run on
    these words. Every field also keeps its residues in a read-only uint8 array, which numpy
    arithmetic, slicing and the byte key used for hashing and equality read from. Both views
    are fixed at construction and never diverge.
    """

    __slots__ = ("q", "_data", "_words", "_hash")

    def __init__(self, data, q: int = 2):
        self.q = check_prime(q)
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise BadShape(f"FMatrix needs a 2-d array, got shape {arr.shape}")
        arr = np.mod(arr, self.q).astype(np.uint8)
        arr.setflags(write=False)
        self._data = arr
        self._words = pack_rows(arr) if self.q == 2 else None
        self._hash = None

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, q: int = 2) -> "FMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), q)

    @classmethod
    def identity(cls, size: int, q: int = 2) -> "FMatrix":
        return cls(np.eye(size, dtype=np.int64), q)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], q: int = 2, cols: Optional[int] = None) -> "FMatrix":
        if len(rows) == 0:
            return cls.zeros(0, cols or 0, q)
        return cls(np.array([list(r) for r in rows], dtype=np.int64).reshape(len(rows), -1), q)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], q: int = 2, rows: Optional[int] = None) -> "FMatrix":
        if len(columns) == 0:
            return cls.zeros(rows or 0, 0, q)
        return cls(np.array([list(c) for c in columns], dtype=np.int64).T, q)

    @classmethod
    def from_row_words(cls, words: Sequence[int], cols: int) -> "FMatrix":
        """GF(2) matrix from row words (bit j = column j); bits at or above cols are dropped"""
        return cls(unpack_rows(words, cols).reshape(len(words), cols), 2)

    @classmethod
    def from_text(cls, text: str, q: int = 2, cols: Optional[int] = None) -> "FMatrix":
        """Parse the row/digit text encoding, e.g. "10/01" is the 2x2 identity"""
        if text == "":
            return cls.zeros(0, cols or 0, q)
        rows = text.split("/")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise BadShape(f"ragged matrix text {text!r}")
        try:
            data = [[int(ch, 36) for ch in r] for r in rows]
        except ValueError as e:
            raise BadShape(f"bad digit in matrix text {text!r}") from e
        if any(x >= q for row in data for x in row):
            raise BadShape(f"digit out of range for q={q} in {text!r}")
        if width == 0:
            return cls.zeros(len(rows), 0, q)
        return cls(data, q)

    @classmethod
    def hstack(cls, blocks: Sequence["FMatrix"]) -> "FMatrix":
        blocks = list(blocks)
        if not blocks:
            raise ShapeMismatch("hstack of nothing")
        q = blocks[0].q
        rows = blocks[0].rows
        for b in blocks:
            if b.q != q or b.rows != rows:
                raise ShapeMismatch("hstack operands disagree in field or row count")
        return cls(np.hstack([b.to_array() for b in blocks]), q)

    @classmethod
    def block_diag(cls, a: "FMatrix", b: "FMatrix") -> "FMatrix":
        if a.q != b.q:
            raise ShapeMismatch("block_diag operands live over different fields")
        out = np.zeros((a.rows + b.rows, a.cols + b.cols), dtype=np.int64)
        out[: a.rows, : a.cols] = a.to_array()
        out[a.rows:, a.cols:] = b.to_array()
        return cls(out, a.q)

    # ------------------------------------------------------------------
    # accessors
    # ------------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def data(self) -> np.ndarray:
        """Read-only residue array"""
        return self._data

    def to_array(self) -> np.ndarray:
        return self._data.astype(np.int64)

    def __getitem__(self, idx):
        out = self._data[idx]
        if isinstance(out, np.ndarray):
            return out.astype(np.int64)
        return int(out)

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self._data[:, j])

    def row(self, i: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self._data[i, :])

    def columns(self) -> List[Tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def words(self) -> Tuple[int, ...]:
        """Rows packed into ints, bit j = column j (q=2 only)"""
        if self.q != 2:
            raise BadShape("row words exist only over F_2")
        return self._words

    # ------------------------------------------------------------------
    # algebra
    # ------------------------------------------------------------------

    def _same_field(self, other: "FMatrix") -> None:
        if not isinstance(other, FMatrix) or other.q != self.q:
            raise ShapeMismatch("operands live over different fields")

    def __matmul__(self, other: "FMatrix") -> "FMatrix":
        self._same_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return FMatrix(self.to_array() @ other.to_array(), self.q)

    def __add__(self, other: "FMatrix") -> "FMatrix":
        self._same_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        return FMatrix(self.to_array() + other.to_array(), self.q)

    def __sub__(self, other: "FMatrix") -> "FMatrix":
        self._same_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return FMatrix(self.to_array() - other.to_array(), self.q)

    def __neg__(self) -> "FMatrix":
        return FMatrix(-self.to_array(), self.q)

    def scale(self, c: int) -> "FMatrix":
        return FMatrix(self.to_array() * int(c), self.q)

    @property
    def T(self) -> "FMatrix":
        return FMatrix(self.to_array().T, self.q)

    def take_columns(self, idx: Iterable[int]) -> "FMatrix":
        idx = list(idx)
        return FMatrix(self.to_array()[:, idx].reshape(self.rows, len(idx)), self.q)

    def delete_columns(self, idx: Iterable[int]) -> "FMatrix":
        drop = set(idx)
        return self.take_columns(j for j in range(self.cols) if j not in drop)

    def take_rows(self, idx: Iterable[int]) -> "FMatrix":
        idx = list(idx)
        return FMatrix(self.to_array()[idx, :].reshape(len(idx), self.cols), self.q)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "FMatrix":
        return self.take_rows(rows).take_columns(cols)

    # ------------------------------------------------------------------
    # predicates
    # ------------------------------------------------------------------

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not self._data.any()

    def is_symmetric(self) -> bool:
        return self.is_square() and bool((self._data == self._data.T).all())

    def is_antisymmetric(self) -> bool:
        if not self.is_square():
            return False
        a = self.to_array()
        return bool((np.mod(a + a.T, self.q) == 0).all())

    def column_sums(self) -> Tuple[int, ...]:
        return tuple(int(s) for s in np.mod(self.to_array().sum(axis=0), self.q))

    # ------------------------------------------------------------------
    # encoding and identity
    # ------------------------------------------------------------------

    def to_text(self) -> str:
        digits = "0123456789abcdefghijklmnopqrstuvwxyz"
        if self.q > len(digits):
            raise BadShape(f"text encoding supports q <= {len(digits)}")
        return "/".join("".join(digits[int(x)] for x in row) for row in self._data)

    def column_text(self) -> List[str]:
        """Columns as digit strings, position 1 = row 1"""
        return self.T.to_text().split("/") if self.cols and self.rows else [""] * self.cols

    def key(self) -> Tuple[int, int, int, bytes]:
        return (self.q, self.rows, self.cols, self._data.tobytes())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FMatrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self) -> str:
        return f"FMatrix(q={self.q}, {self.rows}x{self.cols}, {self.to_text()!r})"


@dataclass(frozen=True)
class GLTransform:
    """An invertible matrix together with its inverse"""

    matrix: FMatrix
    inverse: FMatrix

    def __post_init__(self):
        if not self.matrix.is_square() or self.matrix.shape != self.inverse.shape:
            raise BadShape("GLTransform needs square matrices of equal size")
        if self.matrix @ self.inverse != FMatrix.identity(self.size, self.matrix.q):
            raise BadShape("GLTransform inverse does not invert the matrix")

    @property
    def size(self) -> int:
        return self.matrix.rows

    @property
    def q(self) -> int:
        return self.matrix.q

    @classmethod
    def identity(cls, size: int, q: int = 2) -> "GLTransform":
        eye = FMatrix.identity(size, q)
        return cls(eye, eye)

    @classmethod
    def from_matrix(cls, matrix: FMatrix) -> "GLTransform":
        from gf.linalg import invert

        return cls(matrix, invert(matrix))

    def compose(self, other: "GLTransform") -> "GLTransform":
        """Apply self first, then other: columns transform by self.matrix @ other.matrix"""
        return GLTransform(self.matrix @ other.matrix, other.inverse @ self.inverse)

    def inverted(self) -> "GLTransform":
        return GLTransform(self.inverse, self.matrix)
