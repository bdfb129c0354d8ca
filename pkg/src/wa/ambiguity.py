import logging
from dataclasses import dataclass
from enum import Enum

from src.wa.automaton import WeightedAutomaton, run_counts, trim
from src.wa.graph import SupportGraph

logger = logging.getLogger(__name__)


class Ambiguity(str, Enum):
    DETERMINISTIC = "deterministic"
    K_AMBIGUOUS = "k-ambiguous"
    FINITELY_AMBIGUOUS = "finitely ambiguous"
    POLYNOMIALLY_AMBIGUOUS = "polynomially ambiguous"
    EXPONENTIALLY_AMBIGUOUS = "exponentially ambiguous"


@dataclass(frozen=True, slots=True)
class AmbiguityReport:
    """Ambiguity class of a trimmed automaton plus the structural evidence for it.

    `k` is the exact maximum number of accepting runs of one length (finite classes).
    `degree` bounds the run count by C·(n+1)^degree (None when exponential).
    `witness_state` is a state on two cycles (exponential) and `cycles_on_path` the
    largest number of cycles a single run can pass through.
    """

    ambiguity: Ambiguity
    k: int | None = None
    degree: int | None = None
    witness_state: int | None = None
    cycles_on_path: int = 0

    @property
    def polynomial(self) -> bool:
        return self.ambiguity is not Ambiguity.EXPONENTIALLY_AMBIGUOUS

    @property
    def finite(self) -> bool:
        return self.ambiguity in (Ambiguity.DETERMINISTIC, Ambiguity.K_AMBIGUOUS, Ambiguity.FINITELY_AMBIGUOUS)

    def describe(self) -> str:
        match self.ambiguity:
            case Ambiguity.EXPONENTIALLY_AMBIGUOUS:
                return f"exponentially ambiguous (state {self.witness_state} lies on two cycles)"
            case Ambiguity.POLYNOMIALLY_AMBIGUOUS:
                return f"polynomially ambiguous, degree {self.degree}"
            case Ambiguity.DETERMINISTIC:
                return "deterministic (polynomially ambiguous, degree 0)"
        return f"{self.ambiguity.value}, k = {self.k} (polynomially ambiguous, degree 0)"


def is_deterministic(a: WeightedAutomaton) -> bool:
    return len(a.initial_states) <= 1 and all(len(a.successors(p)) <= 1 for p in range(a.n_states))


def classify_ambiguity(a: WeightedAutomaton) -> AmbiguityReport:
    a = trim(a)
    if is_deterministic(a):
        return AmbiguityReport(Ambiguity.DETERMINISTIC, k=min(1, a.n_states), degree=0)
    graph = SupportGraph(a)
    for component in graph.components:
        if component.branches:
            witness = next(p for p in component.states if graph.inner_out_degree(p) >= 2)
            logger.debug("state %d lies on two cycles", witness)
            return AmbiguityReport(Ambiguity.EXPONENTIALLY_AMBIGUOUS, witness_state=witness)
    depth = graph.max_cycles_on_path()
    if depth >= 2:
        return AmbiguityReport(Ambiguity.POLYNOMIALLY_AMBIGUOUS, degree=depth - 1, cycles_on_path=depth)
    # run counts are periodic after a preamble no longer than the number of states
    horizon = a.n_states + graph.period() + 1
    k = max(run_counts(a, horizon))
    kind = Ambiguity.FINITELY_AMBIGUOUS if depth == 1 else Ambiguity.K_AMBIGUOUS
    return AmbiguityReport(kind, k=k, degree=0, cycles_on_path=depth)
