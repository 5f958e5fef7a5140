"""
Acceptance checks run by `commutant verify`, grouped into tiers.

Every check is a named zero-argument callable returning True on success. Checks marked heavy
take minutes of dense work and only run when settings.slow_tests is set.
"""

import itertools
from dataclasses import dataclass
from functools import partial
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np
import sympy

from commutant import (
    CommClass,
    class_report,
    class_table,
    clifford_weingarten_bound,
    closed_product,
    dimension,
    dimension_bounds,
    enumerate_classes,
    gram,
    orbit_size,
    reduced_basis,
    weingarten,
)
from config import settings
from dense import (
    DenseOperator,
    apply_random_clifford,
    average_purity,
    commutes_with_clifford,
    dense_mho,
    dense_monomial,
    dense_pauli,
    exact_twirl,
    haar_pauli_correlator,
    haar_state_twirl,
    haar_weingarten,
    permutation_operator,
    plus_state,
    random_state,
    t_state,
    twirled_purity,
    weingarten_twirl,
    zero_state,
)
from gf import FMatrix, GLTransform, invert, nullspace, rank
from magic import (
    bell_magic,
    bell_magic_bounds,
    orbit_trace_distance_k4,
    stabilizer_entropy,
    stabilizer_purity,
    state_orbit,
    testing_success,
)
from monomial import (
    Monomial,
    apply_gl,
    canonical,
    classify,
    monomial_from_text,
    multiply,
    named_monomial,
    primitive,
    transposition,
)
from pauli import PauliTensor, all_paulis, parse_pauli, pauli_mul, symplectic
from utils.errors import CommutantError
from utils.logging import get_logger


logger = get_logger(__name__)

DIMENSION_LADDER = (1, 2, 6, 30, 270, 4590, 151470, 9845550)
K6_TABLE = {"Omega_2": 720, "Omega_4": 2700, "Omega_6": 720, "Omega_44": 450}


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], bool]
    heavy: bool = False


# ----------------------------------------------------------------------
# shared helpers
# ----------------------------------------------------------------------


def span_rank(vectors: Iterable[np.ndarray], rtol: float = 1e-8) -> int:
    """
    Rank of a stream of vectors, by Gram-Schmidt with one reorthogonalization pass.

    A vector counts as new when its residual exceeds rtol times its norm. Only the
    orthonormal basis is held in memory.
    """
    basis: Optional[np.ndarray] = None
    for v in vectors:
        v = np.asarray(v, dtype=complex).reshape(-1)
        norm = np.linalg.norm(v)
        if norm == 0:
            continue
        r = v
        if basis is not None:
            for _ in range(2):
                r = r - basis.T @ (basis.conj() @ r)
        residual = np.linalg.norm(r)
        if residual > rtol * norm:
            row = (r / residual)[None, :]
            basis = row if basis is None else np.vstack([basis, row])
    return 0 if basis is None else basis.shape[0]


def is_balanced(copies) -> bool:
    """True if the copies' symplectic vectors sum to zero, the condition for a nonzero twirl"""
    q = copies[0].q
    return not np.any(np.mod(np.sum([c.bits for c in copies], axis=0), q))


def pauli_tensors(n: int, k: int, q: int = 2, balanced_only: bool = False) -> Iterator[PauliTensor]:
    """Every k-copy Pauli tensor on n qudits, or only those whose copies sum to zero"""
    paulis = list(all_paulis(n, q))
    if not balanced_only:
        for copies in itertools.product(paulis, repeat=k):
            yield PauliTensor.from_copies(list(copies))
        return
    lookup = {p.bits: p for p in paulis}
    for head in itertools.product(paulis, repeat=k - 1):
        last = tuple(int(x) for x in np.mod(-np.sum([p.bits for p in head], axis=0), q))
        yield PauliTensor.from_copies(list(head) + [lookup[last]])


def twirl_rank(n: int, k: int, q: int = 2, balanced_only: bool = False) -> int:
    """Rank of the span of exact twirls of Pauli tensors"""
    return span_rank(exact_twirl(dense_pauli(t)).matrix for t in pauli_tensors(n, k, q, balanced_only))


def unbalanced_twirls_vanish(n: int, k: int, q: int = 2, samples: int = 200, seed: int = 0) -> bool:
    """Sampled check that tensors whose copies do not sum to zero twirl to zero"""
    rng = np.random.default_rng(seed)
    paulis = list(all_paulis(n, q))
    checked = 0
    while checked < samples:
        copies = [paulis[i] for i in rng.integers(len(paulis), size=k)]
        if is_balanced(copies):
            continue
        if exact_twirl(dense_pauli(PauliTensor.from_copies(copies))).max_abs() > 1e-12:
            return False
        checked += 1
    return True


def mho_overlaps(n: int, k: int, q: int = 2, chunk: int = 32) -> Tuple[List[CommClass], np.ndarray]:
    """
    tr(mho_I(c)† mho_I(c')) over all enumerated classes.

    One block of `chunk` dense operators is held at a time and later operators are rebuilt
    per block.
    """
    classes = list(enumerate_classes(n, k, q))
    count = len(classes)
    out = np.zeros((count, count), dtype=complex)

    def flat(i: int) -> np.ndarray:
        return dense_mho(classes[i], n).matrix.reshape(-1)

    for start in range(0, count, chunk):
        stop = min(start + chunk, count)
        block = np.array([flat(i) for i in range(start, stop)])
        out[start:stop, start:stop] = block.conj() @ block.T
        for j in range(stop, count):
            column = block.conj() @ flat(j)
            out[start:stop, j] = column
            out[j, start:stop] = np.conj(column)
        logger.debug(f"overlaps of classes {start}..{stop - 1} of {count} at n={n}, k={k}")
    return classes, out


def mho_orthogonal(n: int, k: int, q: int = 2, rtol: float = 1e-8) -> bool:
    """tr(mho_I† mho_I') = δ d^k/|S| to relative error rtol"""
    classes, overlaps = mho_overlaps(n, k, q)
    d = q ** n
    expected = np.diag([d ** k / orbit_size(c, n) for c in classes]).astype(complex)
    return bool(np.all(np.abs(overlaps - expected) <= rtol * np.maximum(1.0, np.abs(expected))))


def mho_commute(n: int, k: int, q: int = 2) -> bool:
    return all(commutes_with_clifford(dense_mho(c, n), tol=1e-10) for c in enumerate_classes(n, k, q))


def basis_commutes(n: int, k: int, q: int = 2) -> bool:
    return all(commutes_with_clifford(dense_monomial(m, n), tol=1e-10) for m in reduced_basis(k, q))


def basis_commutes_by_orbit(n: int, k: int) -> bool:
    """
    Every reduced basis monomial commutes with the Clifford generators.

    Each basis monomial is T_π Ω T_σ for the representative Ω of its two-sided orbit, so it is
    enough that every representative and every adjacent transposition commutes, and that
    the orbits cover the basis.
    """
    table = class_table(k)
    covered = all(table.orbit_of(m) for m in reduced_basis(k))
    if not covered or table.total != len(reduced_basis(k)):
        return False
    for row in table.rows:
        if not commutes_with_clifford(dense_monomial(row.representative, n), tol=1e-10):
            logger.warning(f"orbit representative {row.label} fails to commute at n={n}")
            return False
    for i in range(k - 1):
        perm = list(range(k))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if not commutes_with_clifford(permutation_operator(perm, n), tol=1e-10):
            return False
    return True


def random_even_monomial(rng: np.random.Generator, k: int, m: int, q: int = 2) -> Monomial:
    """Random monomial with zero-sum columns and a random phase matrix"""
    v = rng.integers(0, q, size=(k, m))
    v[-1] = (-v[:-1].sum(axis=0)) % q
    upper = np.triu(rng.integers(0, q, size=(m, m)), 1)
    phases = upper + upper.T if q == 2 else upper - upper.T
    return Monomial(k, q, FMatrix(v, q), FMatrix(phases, q))


def random_gl(rng: np.random.Generator, size: int, q: int = 2) -> GLTransform:
    while True:
        a = FMatrix(rng.integers(0, q, size=(size, size)), q)
        if rank(a) == size:
            return GLTransform.from_matrix(a)


def _same_operator(a: Monomial, b: Monomial, n: int) -> bool:
    return bool(np.allclose(dense_monomial(a, n).matrix, dense_monomial(b, n).matrix, atol=1e-10))


def _trace_norm(a: np.ndarray) -> float:
    return float(np.abs(np.linalg.eigvalsh((a + a.conj().T) / 2)).sum())


# ----------------------------------------------------------------------
# gf
# ----------------------------------------------------------------------


def check_rank_nullity() -> bool:
    rng = np.random.default_rng(settings.seed)
    for q in (2, 3):
        for _ in range(100):
            rows, cols = (int(x) for x in rng.integers(1, 9, size=2))
            a = FMatrix(rng.integers(0, q, size=(rows, cols)), q)
            null = nullspace(a)
            if rank(a) != rank(a.T) or rank(a) + null.cols != cols:
                return False
            if null.cols and not (a @ null).is_zero():
                return False
    return True


def check_inverses() -> bool:
    rng = np.random.default_rng(settings.seed)
    for q in (2, 3):
        for size in range(1, 9):
            t = random_gl(rng, size, q)
            eye = FMatrix.identity(size, q)
            if t.matrix @ invert(t.matrix) != eye or invert(t.matrix) @ t.matrix != eye:
                return False
    return True


# ----------------------------------------------------------------------
# pauli
# ----------------------------------------------------------------------


def check_pauli_products() -> bool:
    """dense(P·R) = dense(P)·dense(R) including the phase, qubits and qutrits"""
    rng = np.random.default_rng(settings.seed)
    for q in (2, 3):
        for n in (1, 2):
            paulis = list(all_paulis(n, q))
            for i, j in rng.integers(len(paulis), size=(50, 2)):
                p, r = paulis[i], paulis[j]
                product, phase = pauli_mul(p, r)
                lhs = dense_pauli(p).matrix @ dense_pauli(r).matrix
                if not np.allclose(lhs, phase.value * dense_pauli(product).matrix, atol=1e-10):
                    return False
    return True


def check_symplectic_commutation() -> bool:
    """The symplectic form vanishes exactly on commuting pairs"""
    for q in (2, 3):
        paulis = list(all_paulis(1, q)) if q == 3 else list(all_paulis(2, q))
        for p, r in itertools.product(paulis, repeat=2):
            a, b = dense_pauli(p).matrix, dense_pauli(r).matrix
            if (symplectic(p, r) == 0) != np.allclose(a @ b, b @ a, atol=1e-10):
                return False
    return True


# ----------------------------------------------------------------------
# monomial
# ----------------------------------------------------------------------


def check_gl_soundness(pairs: int) -> bool:
    """Random (monomial, GL move) pairs at k ≤ 8 keep the dense operator"""
    rng = np.random.default_rng(settings.seed)
    for _ in range(pairs):
        k = int(rng.integers(2, 9))
        m = int(rng.integers(1, min(k, 4) + 1))
        mono = random_even_monomial(rng, k, m)
        moved = apply_gl(mono, random_gl(rng, m))
        if not _same_operator(moved, mono, 1):
            return False
        # n=2 stays under the default dense cap up to six copies
        if k <= 6 and not _same_operator(moved, mono, 2):
            return False
    return True


def check_worked_identity() -> bool:
    """Ω(V, M) with a phase edge equals Ω_6 T_(12) T_(34) T_(56)"""
    edge = monomial_from_text(6, ["111100", "001111"], [(1, 2)])
    product = named_monomial("Omega_6")
    for a, b in [(0, 1), (2, 3), (4, 5)]:
        step = multiply(product, transposition(6, a, b))
        if step.dpower:
            return False
        product = step.reduced
    return canonical(product) == canonical(edge) and _same_operator(product, edge, 2)


def check_qutrit_projector() -> bool:
    mono = primitive(3, (1, 1, 1), q=3)
    a = dense_monomial(mono, 1).matrix
    return classify(mono) == "projector_scaled" and bool(np.allclose(a @ a, 3 * a, atol=1e-10))


# ----------------------------------------------------------------------
# commutant
# ----------------------------------------------------------------------


def check_dimension_ladder() -> bool:
    for k, expected in enumerate(DIMENSION_LADDER, start=1):
        if dimension(max(k - 1, 1), k).total != expected or closed_product(k) != expected:
            return False
    return True


def check_enumeration(n: int, k: int, q: int = 2) -> bool:
    """Enumerated class counts per (m, r) equal the dimension formula"""
    return class_report(n, k, q).counts == dimension(n, k, q).counts


def check_dimension_bounds() -> bool:
    for k in range(2, 11):
        for n in range(1, 6):
            low, high = dimension_bounds(n, k)
            if not low <= dimension(n, k).total <= high:
                return False
    return True


def check_table_k6() -> bool:
    table = class_table(6)
    return table.sizes() == K6_TABLE and table.total == DIMENSION_LADDER[5]


def check_table_k8() -> bool:
    return class_table(8).total == DIMENSION_LADDER[7]


def check_weingarten_asymptotics() -> bool:
    n, k = 11, 4
    w = weingarten(gram(n, k))
    deviation = np.abs(np.diag(w.entries) - (2 ** n) ** -float(k))
    return bool(np.all(deviation <= clifford_weingarten_bound(k, n)))


# ----------------------------------------------------------------------
# dense
# ----------------------------------------------------------------------


def check_twirl_rank(n: int, k: int, q: int = 2) -> bool:
    """Twirls of all Pauli tensors span the commutant"""
    return twirl_rank(n, k, q) == dimension(n, k, q).total


def check_balanced_twirl_rank(n: int, k: int, q: int = 2) -> bool:
    """Twirls of zero-sum Pauli tensors span the commutant and a sample of the rest vanish"""
    if not unbalanced_twirls_vanish(n, k, q, seed=settings.seed):
        return False
    return twirl_rank(n, k, q, balanced_only=True) == dimension(n, k, q).total


def check_weingarten_twirl() -> bool:
    rng = np.random.default_rng(settings.seed)
    basis = reduced_basis(4)
    w = weingarten(gram(2, 4, basis=basis))
    dim = 2 ** 8
    for _ in range(20):
        a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        op = DenseOperator(a, 2, 4)
        if not weingarten_twirl(op, basis, w).close_to(exact_twirl(op), 1e-8):
            return False
    return True


def check_haar_k2() -> bool:
    d = sympy.Symbol("d")
    expected = sympy.Matrix([[1, -1 / d], [-1 / d, 1]]) / (d ** 2 - 1)
    return sympy.simplify(haar_weingarten(2) - expected) == sympy.zeros(2, 2)


def check_haar_purity() -> bool:
    return all(
        abs(twirled_purity(n_a, n_b) - average_purity(2 ** n_a, 2 ** n_b)) < 1e-10
        for n_a, n_b in [(1, 1), (1, 2)]
    )


def check_haar_otoc() -> bool:
    z_first = dense_pauli(parse_pauli("ZI")).matrix
    z_second = dense_pauli(parse_pauli("IZ")).matrix
    return abs(haar_pauli_correlator(z_first, z_second, 2) - 8 / 45) < 1e-10


# ----------------------------------------------------------------------
# magic
# ----------------------------------------------------------------------


def check_magic_values() -> bool:
    state = t_state(1)
    stabilizers = [zero_state(2), plus_state(2), apply_random_clifford(zero_state(2), depth=50, seed=settings.seed)]
    other = random_state(2, seed=settings.seed)
    m3 = stabilizer_entropy(other, 3)
    return (
        abs(stabilizer_purity(state, 2) - 0.75) < 1e-12
        and abs(stabilizer_purity(state, 3) - 0.625) < 1e-12
        and all(abs(bell_magic(s)) < 1e-10 for s in stabilizers)
        and abs(testing_success(zero_state(2)) - 0.5) < 1e-12
        and abs(2.0 ** (-2 * m3) - stabilizer_purity(other, 3)) < 1e-12
    )


def check_bell_bounds() -> bool:
    rng = np.random.default_rng(settings.seed)
    for i in range(200):
        state = random_state(1 + i % 2, rng=rng)
        low, high = bell_magic_bounds(state)
        if not low - 1e-10 <= bell_magic(state) <= high + 1e-10:
            return False
    return True


def check_orbit(k: int) -> bool:
    """Orbit weights sum to one and reproduce the exact twirl at n=2"""
    states = [random_state(2, seed=settings.seed), t_state(2)]
    for state in states:
        result = state_orbit(state, k)
        if abs(result.total() - 1) > 1e-12:
            return False
        twirled = exact_twirl(state.copies(k)).matrix
        if not np.allclose(result.reconstruct(2).matrix, twirled, atol=1e-8):
            return False
    return True


def check_trace_distance_k4() -> bool:
    for state in (random_state(2, seed=settings.seed), t_state(2), zero_state(2)):
        diff = exact_twirl(state.copies(4)).matrix - haar_state_twirl(state, 4).matrix
        if abs(orbit_trace_distance_k4(state) - _trace_norm(diff)) > 1e-8:
            return False
    return True


# ----------------------------------------------------------------------
# tiers
# ----------------------------------------------------------------------


def _grid(prefix: str, fn: Callable[..., bool], cases, heavy=()) -> List[Check]:
    out = []
    for case in cases:
        name = prefix + "_" + "_".join(f"{key}{value}" for key, value in zip(("n", "k", "q"), case))
        out.append(Check(name, partial(fn, *case), heavy=case in heavy))
    return out


def tier_checks() -> Dict[str, List[Check]]:
    enumeration = [(n, k) for n in range(1, 5) for k in range(2, 7)]
    return {
        "gf": [
            Check("rank_nullity", check_rank_nullity),
            Check("inverses", check_inverses),
        ],
        "pauli": [
            Check("products", check_pauli_products),
            Check("symplectic_commutation", check_symplectic_commutation),
        ],
        "monomial": [
            Check("gl_soundness", partial(check_gl_soundness, 100)),
            Check("gl_soundness_full", partial(check_gl_soundness, 1000), heavy=True),
            Check("worked_identity", check_worked_identity),
            Check("qutrit_projector", check_qutrit_projector),
        ],
        "commutant": [
            Check("dimension_ladder", check_dimension_ladder),
            Check("dimension_bounds", check_dimension_bounds),
            *_grid("enumeration", check_enumeration, enumeration),
            *_grid("enumeration", check_enumeration, [(1, 8), (2, 8)], heavy=[(1, 8), (2, 8)]),
            *_grid("enumeration", check_enumeration, [(1, 3, 3), (1, 4, 3), (2, 3, 3), (2, 4, 3)]),
            Check("table_k6", check_table_k6),
            Check("table_k8", check_table_k8, heavy=True),
            Check("weingarten_asymptotics", check_weingarten_asymptotics, heavy=True),
        ],
        "dense": [
            *_grid("twirl_rank", check_twirl_rank, [(1, 4), (1, 5), (2, 4)], heavy=[(2, 4)]),
            *_grid("twirl_rank", check_twirl_rank, [(1, 3, 3), (1, 4, 3)]),
            *_grid("twirl_rank", check_balanced_twirl_rank, [(2, 3, 3)], heavy=[(2, 3, 3)]),
            *_grid(
                "mho_commutation",
                mho_commute,
                [(n, k) for n in (1, 2) for k in range(2, 6)],
                heavy=[(2, 5)],
            ),
            *_grid(
                "basis_commutation",
                basis_commutes,
                [(n, k) for n in (1, 2) for k in range(2, 7) if (n, k) != (2, 6)],
                heavy=[(2, 5)],
            ),
            *_grid("basis_commutation_by_orbit", basis_commutes_by_orbit, [(2, 6)], heavy=[(2, 6)]),
            *_grid("orthogonality", mho_orthogonal, [(2, k) for k in range(2, 6)], heavy=[(2, 5)]),
            Check("weingarten_twirl", check_weingarten_twirl),
            Check("haar_k2", check_haar_k2),
            Check("haar_purity", check_haar_purity),
            Check("haar_otoc", check_haar_otoc),
        ],
        "magic": [
            Check("magic_values", check_magic_values),
            Check("bell_bounds", check_bell_bounds),
            Check("orbit_k4", partial(check_orbit, 4)),
            Check("trace_distance_k4", check_trace_distance_k4),
            Check("orbit_k5", partial(check_orbit, 5), heavy=True),
            Check("orbit_k6", partial(check_orbit, 6), heavy=True),
        ],
    }


TIERS = ("gf", "pauli", "monomial", "commutant", "dense", "magic")


def selected_checks(tier: str, slow: Optional[bool] = None) -> List[Check]:
    slow = settings.slow_tests if slow is None else slow
    return [c for c in tier_checks()[tier] if slow or not c.heavy]


def run_tier(tier: str, slow: Optional[bool] = None) -> Dict[str, bool]:
    """Run one tier and report pass or fail per check; heavy checks only when slow is on"""
    results: Dict[str, bool] = {}
    for check in selected_checks(tier, slow):
        try:
            results[check.name] = bool(check.run())
        except CommutantError as e:
            logger.error(f"{tier}/{check.name} raised {e}")
            results[check.name] = False
        logger.info(f"{tier}/{check.name}: {'pass' if results[check.name] else 'FAIL'}")
    return results


VERIFY: Dict[str, Callable[[], Dict[str, bool]]] = {tier: partial(run_tier, tier) for tier in TIERS}
