"""
Word-parallel GF(2) kernels.

A matrix row is a Python int whose bit j holds the entry in column j, so adding one row to
another is a single XOR regardless of width.
"""

from typing import List, Sequence, Tuple

import numpy as np


def pack_rows(bits: np.ndarray) -> Tuple[int, ...]:
    """0/1 rows to words, bit j = column j"""
    return tuple(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in bits.astype(np.uint8))


def unpack_rows(words: Sequence[int], cols: int) -> np.ndarray:
    """Words back to a 0/1 array with cols columns; higher bits are dropped"""
    width = (cols + 7) // 8
    out = np.zeros((len(words), cols), dtype=np.uint8)
    for i, w in enumerate(words):
        raw = np.frombuffer((w & ((1 << cols) - 1)).to_bytes(width, "little"), dtype=np.uint8)
        out[i] = np.unpackbits(raw, bitorder="little")[:cols]
    return out


def rank_words(words: Sequence[int]) -> int:
    """Rank of a set of GF(2) row words"""
    basis: List[int] = []
    for w in words:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
    return len(basis)


def rref_words(words: Sequence[int], limit: int) -> Tuple[List[int], List[int]]:
    """
    Reduced row echelon form over GF(2), pivoting only in columns [0, limit).

    Pivot columns are taken leftmost first and each pivot row is the topmost remaining
    row carrying that column.

    Returns:
        (reduced rows, pivot columns)
    """
    rows = list(words)
    pivots: List[int] = []
    r = 0
    for c in range(limit):
        if r == len(rows):
            break
        bit = 1 << c
        hit = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if hit is None:
            continue
        rows[r], rows[hit] = rows[hit], rows[r]
        pivot_row = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= pivot_row
        pivots.append(c)
        r += 1
    return rows, pivots


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def symplectic_words(x1: int, z1: int, x2: int, z2: int) -> int:
    """Symplectic form of two Paulis given as (x, z) bitmasks, mod 2"""
    return parity((x1 & z2) ^ (z1 & x2))
