import math
from dataclasses import asdict, dataclass, field
from typing import Dict, Optional, Sequence

from config import settings
from dense.states import StateVector
from magic.bell import bell_magic, testing_success
from magic.purities import expectation_table, generalized_purity, stabilizer_purity
from monomial.model import Monomial
from utils.logging import get_logger


logger = get_logger(__name__)


@dataclass
class MagicReport:
    """Magic figures of one pure state together with the settings they were computed under"""

    n: int
    label: Optional[str]
    seed: Optional[int]
    purities: Dict[int, float]
    entropies: Dict[int, float]
    bell_magic: float
    success_probability: float
    generalized: Dict[str, float] = field(default_factory=dict)
    tolerance: float = field(default_factory=lambda: settings.tolerance)

    def to_dict(self) -> dict:
        return asdict(self)


def _entropy(purity: float, alpha: int) -> float:
    # Stabilizer states sit at purity one up to rounding
    value = math.log2(purity) / (1 - alpha)
    return 0.0 if abs(value) < settings.tolerance else value


def magic_report(
    state: StateVector,
    alphas: Sequence[int] = (2, 3, 4),
    monomials: Sequence[Monomial] = (),
) -> MagicReport:
    """Purities, entropies, Bell magic, testing success and any requested Δ_Ω for one state"""
    table = expectation_table(state)
    purities = {alpha: stabilizer_purity(state, alpha, table) for alpha in alphas}
    entropies = {alpha: _entropy(purities[alpha], alpha) for alpha in alphas}
    generalized = {str(m): generalized_purity(state, m) for m in monomials}
    report = MagicReport(
        n=state.n,
        label=state.label,
        seed=state.seed,
        purities=purities,
        entropies=entropies,
        bell_magic=bell_magic(state),
        success_probability=testing_success(state),
        generalized=generalized,
    )
    logger.info(f"magic report for {state.label or 'state'} on n={state.n}: B={report.bell_magic:.6f}")
    return report
