import logging

from src.errors import CrossCheckError
from src.ratmath.ratfunc import RationalFunction, berlekamp_massey
from src.wa.automaton import WeightedAutomaton, trim, values

logger = logging.getLogger(__name__)


def wa_series(a: WeightedAutomaton) -> RationalFunction:
    """Reduced generating function of ⟦A⟧.

    An n-state automaton has a series P/Q with deg P < n and deg Q <= n, so the first
    2n terms pin it down.
    """
    a = trim(a)
    terms = values(a, 2 * a.n_states)
    return berlekamp_massey(terms)


def equiv(a: WeightedAutomaton, b: WeightedAutomaton) -> bool:
    """⟦A⟧ = ⟦B⟧, decided on the first |A| + |B| terms and checked against the series."""
    n = max(1, a.n_states + b.n_states)
    left, right = values(a, n), values(b, n)
    same_terms = left == right
    same_series = wa_series(a).same_series(wa_series(b))
    if same_terms != same_series:
        index = next((i for i, (u, v) in enumerate(zip(left, right)) if u != v), n)
        raise CrossCheckError("equivalence by terms and by series", index, left[min(index, n - 1)], right[min(index, n - 1)])
    logger.debug("equivalence on %d terms: %s", n, same_terms)
    return same_terms
