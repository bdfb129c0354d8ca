"""Worked example automata, including one witness for each strict step of the ambiguity hierarchy."""

from src.wa.automaton import WeightedAutomaton
from src.wa.constructions import geo_automaton, shuffle, union


def chained_loop_a1() -> WeightedAutomaton:
    """q₀ ⇄ p with weights 1 and 3; I(q₀) = 2, F(q₀) = 1. Series 2/(1 - 3x²)."""
    return WeightedAutomaton.build(2, [(0, 1, 1), (1, 0, 3)], [(0, 2)], [(0, 1)])


def chained_loop_a2() -> WeightedAutomaton:
    """One state looping with weight 5; I = 5, F = 1. Series 5/(1 - 5x)."""
    return WeightedAutomaton.build(1, [(0, 0, 5)], [(0, 5)], [(0, 1)])


def chained_loop_a3() -> WeightedAutomaton:
    """A₁ then A₂, joined by an edge of weight 5. Series 10x/((1 - 3x²)(1 - 5x))."""
    return WeightedAutomaton.build(
        3,
        [(0, 1, 1), (1, 0, 3), (0, 2, 5), (2, 2, 5)],
        [(0, 2)],
        [(2, 1)],
    )


def fibonacci_automaton() -> WeightedAutomaton:
    """M = [[1, 1], [1, 0]], I = e₁, F = e₂."""
    return WeightedAutomaton.build(2, [(0, 0, 1), (0, 1, 1), (1, 0, 1)], [(0, 1)], [(1, 1)])


def shuffle_power_witness() -> WeightedAutomaton:
    """shuffle(⟨2ⁿ⟩, ⟨1⟩): unambiguous but not deterministic."""
    return shuffle([geo_automaton(1, 2), geo_automaton(1, 1)])


def power_sum_witness(k: int) -> WeightedAutomaton:
    """1ⁿ + 2ⁿ + ... + (k+1)ⁿ: (k+1)-ambiguous."""
    result = WeightedAutomaton.empty()
    for base in range(1, k + 2):
        result = union(result, geo_automaton(1, base))
    return result


def naturals_witness() -> WeightedAutomaton:
    """⟨n⟩: polynomially ambiguous of degree 1, not finitely ambiguous."""
    return WeightedAutomaton.build(2, [(0, 0, 1), (1, 1, 1), (0, 1, 1)], [(0, 1)], [(1, 1)])


HIERARCHY_WITNESSES = {
    "shuffle-powers": shuffle_power_witness,
    "power-sum-3": lambda: power_sum_witness(2),
    "naturals": naturals_witness,
    "fibonacci": fibonacci_automaton,
}
