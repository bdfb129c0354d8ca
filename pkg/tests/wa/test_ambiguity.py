import pytest

from src.wa.ambiguity import Ambiguity, classify_ambiguity, is_deterministic
from src.wa.automaton import WeightedAutomaton
from src.wa.constructions import fin_automaton, union
from src.wa.graph import SupportGraph, tarjan
from src.wa.witnesses import (
    HIERARCHY_WITNESSES,
    chained_loop_a1,
    chained_loop_a3,
    fibonacci_automaton,
    naturals_witness,
    power_sum_witness,
    shuffle_power_witness,
)


def test_tarjan_emits_sinks_first():
    # 0 -> 1 <-> 2 -> 3
    components = tarjan([[1], [2], [1, 3], []])
    assert components == [[3], [1, 2], [0]]


def test_support_graph():
    g = SupportGraph(chained_loop_a3())
    assert g.cycle(0) == [0, 1]
    assert sorted(g.cycle_lengths()) == [1, 2]
    assert g.period() == 2
    assert g.max_cycles_on_path() == 2


def test_chained_loop_a1_is_deterministic():
    report = classify_ambiguity(chained_loop_a1())
    assert report.ambiguity is Ambiguity.DETERMINISTIC
    assert report.polynomial and report.finite
    assert report.describe() == "deterministic (polynomially ambiguous, degree 0)"


def test_shuffle_witness_is_unambiguous_but_not_deterministic():
    a = shuffle_power_witness()
    assert not is_deterministic(a)
    report = classify_ambiguity(a)
    assert report.ambiguity is Ambiguity.FINITELY_AMBIGUOUS
    assert report.k == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_power_sums_are_k_plus_one_ambiguous(k):
    report = classify_ambiguity(power_sum_witness(k))
    assert report.ambiguity is Ambiguity.FINITELY_AMBIGUOUS
    assert report.k == k + 1
    assert report.describe() == f"finitely ambiguous, k = {k + 1} (polynomially ambiguous, degree 0)"


def test_naturals_are_polynomially_ambiguous():
    report = classify_ambiguity(naturals_witness())
    assert report.ambiguity is Ambiguity.POLYNOMIALLY_AMBIGUOUS
    assert report.degree == 1
    assert not report.finite
    assert report.describe() == "polynomially ambiguous, degree 1"


def test_fibonacci_is_exponentially_ambiguous():
    report = classify_ambiguity(fibonacci_automaton())
    assert report.ambiguity is Ambiguity.EXPONENTIALLY_AMBIGUOUS
    assert report.witness_state == 0
    assert not report.polynomial


def test_acyclic_branching_is_k_ambiguous():
    a = union(fin_automaton([1, 2]), fin_automaton([3]))
    report = classify_ambiguity(a)
    assert report.ambiguity is Ambiguity.K_AMBIGUOUS
    assert report.k == 2


def test_useless_branches_are_ignored():
    # the second initial state reaches no final state
    a = WeightedAutomaton.build(2, [(0, 0, 2)], [(0, 1), (1, 1)], [(0, 1)])
    assert classify_ambiguity(a).ambiguity is Ambiguity.DETERMINISTIC


def test_empty_automaton_is_deterministic():
    report = classify_ambiguity(WeightedAutomaton.empty())
    assert report.ambiguity is Ambiguity.DETERMINISTIC
    assert report.k == 0


def test_every_witness_is_classified():
    classes = {name: classify_ambiguity(build()).ambiguity for name, build in HIERARCHY_WITNESSES.items()}
    assert classes == {
        "shuffle-powers": Ambiguity.FINITELY_AMBIGUOUS,
        "power-sum-3": Ambiguity.FINITELY_AMBIGUOUS,
        "naturals": Ambiguity.POLYNOMIALLY_AMBIGUOUS,
        "fibonacci": Ambiguity.EXPONENTIALLY_AMBIGUOUS,
    }
