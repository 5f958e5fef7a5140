"""
Pauli and Weyl operators on n qudits as vectors over F_q.

A PauliString stores b = (a_1, c_1, a_2, c_2, ...) and stands for
W(b) = ⊗_j τ^{a_j c_j} X^{a_j} Z^{c_j}, where X|j> = |j+1>, Z|j> = ω^j |j>,
ω = e^{2πi/q} and τ = -e^{iπ/q}. For q=2 this is X, Y = iXZ, Z.

Phases are exact integer exponents of ζ = e^{iπ/q}, kept mod 2q, so τ = ζ^t with
t = q² + 1 mod 2q and ω = ζ².
"""

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

import numpy as np

from gf.matrix import check_prime
from utils.errors import BadShape, ShapeMismatch


@lru_cache(maxsize=64)
def tau_exponent(q: int) -> int:
    """Exponent t of ζ with τ = ζ^t"""
    return (q * q + 1) % (2 * q)


@dataclass(frozen=True)
class Phase:
    """ζ^exponent with ζ = e^{iπ/q}; for q=2 the powers of i"""

    exponent: int
    q: int = 2

    def __post_init__(self):
        object.__setattr__(self, "exponent", int(self.exponent) % (2 * self.q))

    @classmethod
    def one(cls, q: int = 2) -> "Phase":
        return cls(0, q)

    def __mul__(self, other: "Phase") -> "Phase":
        if other.q != self.q:
            raise ShapeMismatch("phases over different fields")
        return Phase(self.exponent + other.exponent, self.q)

    def conjugate(self) -> "Phase":
        return Phase(-self.exponent, self.q)

    @property
    def value(self) -> complex:
        if self.q == 2:
            return (1, 1j, -1, -1j)[self.exponent]
        return complex(np.exp(1j * np.pi * self.exponent / self.q))

    def __repr__(self) -> str:
        if self.q == 2:
            return f"Phase({('+1', '+i', '-1', '-i')[self.exponent]})"
        return f"Phase(zeta^{self.exponent}, q={self.q})"


@dataclass(frozen=True)
class PauliString:
    """A Weyl operator on n qudits, bits interleaved as (x_1, z_1, x_2, z_2, ...)"""

    q: int
    n: int
    bits: Tuple[int, ...]

    def __post_init__(self):
        check_prime(self.q)
        bits = tuple(int(b) % self.q for b in self.bits)
        if len(bits) != 2 * self.n:
            raise BadShape(f"a Pauli on {self.n} qudits needs {2 * self.n} bits, got {len(bits)}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def identity(cls, n: int, q: int = 2) -> "PauliString":
        return cls(q, n, (0,) * (2 * n))

    @classmethod
    def from_xz(cls, x: Sequence[int], z: Sequence[int], q: int = 2) -> "PauliString":
        if len(x) != len(z):
            raise BadShape("x and z parts must have equal length")
        return cls(q, len(x), tuple(v for pair in zip(x, z) for v in pair))

    @property
    def x(self) -> Tuple[int, ...]:
        return self.bits[0::2]

    @property
    def z(self) -> Tuple[int, ...]:
        return self.bits[1::2]

    def is_identity(self) -> bool:
        return not any(self.bits)

    def weight(self) -> int:
        return sum(1 for a, c in zip(self.x, self.z) if a or c)

    def inverse_bits(self) -> "PauliString":
        """W(b)† = W(-b)"""
        return PauliString(self.q, self.n, tuple(-b for b in self.bits))

    def to_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.int64)

    def __str__(self) -> str:
        return format_pauli(self)


def _check_pair(p: PauliString, r: PauliString) -> None:
    if p.q != r.q or p.n != r.n:
        raise ShapeMismatch(f"Paulis disagree: (q={p.q}, n={p.n}) vs (q={r.q}, n={r.n})")


def symplectic(p: PauliString, r: PauliString) -> int:
    """⟨b, b'⟩ = Σ_j (c_j a'_j − a_j c'_j) mod q, so that P R = ω^{⟨b,b'⟩} R P"""
    _check_pair(p, r)
    q = p.q
    return sum(c * a2 - a * c2 for a, c, a2, c2 in zip(p.x, p.z, r.x, r.z)) % q


def pauli_mul(p: PauliString, r: PauliString) -> Tuple[PauliString, Phase]:
    """
    Multiply two Weyl operators

    Returns:
        (R, ϕ) with P·R' = ϕ·R and b(R) = b(P) + b(R') mod q

    Raises:
        ShapeMismatch: if the operands differ in q or n
    """
    _check_pair(p, r)
    q = p.q
    t = tau_exponent(q)
    exponent = 0
    bits = []
    for a, c, a2, c2 in zip(p.x, p.z, r.x, r.z):
        big_a, big_c = (a + a2) % q, (c + c2) % q
        exponent += t * (a * c + a2 * c2 - big_a * big_c) + 2 * c * a2
        bits.extend((big_a, big_c))
    return PauliString(q, p.n, tuple(bits)), Phase(exponent, q)


def pauli_power(p: PauliString, e: int) -> Tuple[PauliString, Phase]:
    """P^e for e ≥ 0 with its exact phase"""
    result, phase = PauliString.identity(p.n, p.q), Phase.one(p.q)
    for _ in range(int(e)):
        result, step = pauli_mul(result, p)
        phase = phase * step
    return result, phase


def chi(p: PauliString, r: PauliString) -> Phase:
    """Commutation character tr(P R P† R†)/d = ω^{⟨b(P), b(R)⟩}"""
    return Phase(2 * symplectic(p, r), p.q)


def all_paulis(n: int, q: int = 2) -> Iterator[PauliString]:
    """Every Weyl operator on n qudits, bits counted lexicographically"""
    for bits in itertools.product(range(q), repeat=2 * n):
        yield PauliString(q, n, bits)


_LETTERS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_QUDIT = re.compile(r"X(\d+)Z(\d+)")


def parse_pauli(text: str, q: int = 2) -> PauliString:
    """
    Parse a Pauli literal.

    Qubits use one letter from IXYZ per qubit ("XZ" is X ⊗ Z); qudits use exponent pairs
    such as "X1Z2X0Z1".

    Raises:
        BadShape: on malformed literals
    """
    q = check_prime(q)
    if q == 2:
        try:
            pairs = [_LETTERS[ch] for ch in text.strip().upper()]
        except KeyError as e:
            raise BadShape(f"bad Pauli letter in {text!r}") from e
    else:
        text = text.strip()
        pairs = [(int(a), int(c)) for a, c in _QUDIT.findall(text)]
        if "".join(f"X{a}Z{c}" for a, c in _QUDIT.findall(text)) != text:
            raise BadShape(f"bad qudit Pauli literal {text!r}")
        if any(a >= q or c >= q for a, c in pairs):
            raise BadShape(f"exponent out of range for q={q} in {text!r}")
    return PauliString.from_xz([a for a, _ in pairs], [c for _, c in pairs], q)


def format_pauli(p: PauliString) -> str:
    if p.q == 2:
        names = {v: k for k, v in _LETTERS.items()}
        return "".join(names[(a, c)] for a, c in zip(p.x, p.z))
    return "".join(f"X{a}Z{c}" for a, c in zip(p.x, p.z))
