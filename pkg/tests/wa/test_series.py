import random
from fractions import Fraction

from src.ratmath.polynomial import Polynomial
from src.ratmath.ratfunc import RationalFunction
from src.wa.automaton import WeightedAutomaton, trim, values
from src.wa.constructions import geo_automaton, union
from src.wa.series import equiv, wa_series
from src.wa.witnesses import chained_loop_a1, chained_loop_a3, fibonacci_automaton, naturals_witness
from tests.generators import automaton, nonzero_rational


def test_fibonacci_series():
    assert wa_series(fibonacci_automaton()) == RationalFunction.of(Polynomial((0, 1)), Polynomial((1, -1, -1)))


def test_naturals_series():
    assert wa_series(naturals_witness()) == RationalFunction.of(Polynomial((0, 1)), Polynomial((1, -2, 1)))


def test_series_is_reduced():
    f = wa_series(chained_loop_a3())
    assert f.is_reduced()
    assert f.expand(12) == values(chained_loop_a3(), 12)


def test_empty_automaton_has_zero_series():
    assert wa_series(WeightedAutomaton.empty()) == RationalFunction.polynomial(Polynomial.zero())
    assert equiv(WeightedAutomaton.empty(), WeightedAutomaton.build(1, [(0, 0, 2)], [(0, 1)], []))


def test_equiv_on_witnesses():
    assert equiv(chained_loop_a1(), trim(chained_loop_a1()))
    assert not equiv(chained_loop_a1(), chained_loop_a3())
    # 2·2ⁿ two ways
    assert equiv(geo_automaton(2, 2), union(geo_automaton(1, 2), geo_automaton(1, 2)))


def _with_dead_part(a: WeightedAutomaton, rng: random.Random) -> WeightedAutomaton:
    """Union with an automaton whose final vector is zero."""
    dead = automaton(rng)
    dead = WeightedAutomaton(dead.n_states, dead.matrix, dead.initial, (Fraction(0),) * dead.n_states)
    return union(a, dead) if rng.random() < 0.5 else union(dead, a)


def _perturbed(a: WeightedAutomaton, rng: random.Random) -> WeightedAutomaton:
    q = rng.randrange(a.n_states)
    final = list(a.final)
    final[q] += nonzero_rational(rng)
    return WeightedAutomaton(a.n_states, a.matrix, a.initial, tuple(final))


def test_equiv_agrees_with_series_equality():
    rng = random.Random(8)
    for i in range(100):
        a = automaton(rng)
        match i % 4:
            case 0:
                b = trim(a)
            case 1:
                b = _with_dead_part(a, rng)
            case 2:
                b = _perturbed(a, rng)
            case _:
                b = automaton(rng)
        n = 2 * (a.n_states + b.n_states) + 4
        expected = wa_series(a) == wa_series(b)
        assert expected == (values(a, n) == values(b, n))
        assert equiv(a, b) == expected
        if i % 4 in (0, 1):
            assert expected
