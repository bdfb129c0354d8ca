from fractions import Fraction

import pytest

from src.cra.checks import check_copyless, check_normal_form
from src.cra.compile import compile_expr_to_ccra
from src.cra.convert import ccra_to_expr, state_lasso
from src.cra.machine import Cra, cra_values
from src.cra.regexpr import Add, Const, Mul, Var, parse_register_expr
from src.errors import FragmentError, NoNormalFormOrder, NotCopyless
from src.samples import fibonacci_machine
from src.seqexpr.ast import Arith
from src.seqexpr.evaluator import evaluate
from src.seqexpr.parser import parse
from tests.cra.test_machine import doubling_after_five
from tests.generators import polyrat_exprs


def test_counter():
    c = Cra(
        registers=("x",),
        n_states=1,
        delta=((0, {"x": Add(Var("x"), Const(Fraction(1)))}),),
        nu0={"x": Fraction(0)},
        mu={0: Var("x")},
    )
    assert ccra_to_expr(c) == Arith(Fraction(0), Fraction(1))


def test_tail_and_loop():
    c = doubling_after_five()
    assert state_lasso(c) == ([0], [1])
    assert evaluate(ccra_to_expr(c), 12) == cra_values(c, 12)


def test_settling_register():
    # y reads x, which becomes the constant 7 after one step
    c = Cra(
        registers=("x", "y"),
        n_states=1,
        delta=((0, {"x": Const(Fraction(7)), "y": parse_register_expr("2*y + x")}),),
        nu0={"x": Fraction(1), "y": Fraction(0)},
        mu={0: Mul(Var("x"), Var("y"))},
    )
    assert evaluate(ccra_to_expr(c), 10) == cra_values(c, 10)


def test_two_state_loop():
    c = Cra(
        registers=("x",),
        n_states=2,
        delta=((1, {"x": parse_register_expr("x + 1")}), (0, {"x": parse_register_expr("3*x")})),
        nu0={"x": Fraction(1)},
        mu={0: Var("x"), 1: parse_register_expr("x + 1/2")},
    )
    assert evaluate(ccra_to_expr(c), 15) == cra_values(c, 15)


def test_rejects_copying_and_cycles():
    with pytest.raises(NotCopyless):
        ccra_to_expr(fibonacci_machine())
    swap = Cra(
        registers=("x", "y"),
        n_states=1,
        delta=((0, {"x": Var("y"), "y": Var("x")}),),
        nu0={"x": Fraction(1)},
        mu={0: Var("x")},
    )
    with pytest.raises(NoNormalFormOrder):
        ccra_to_expr(swap)


def test_compile_atoms_and_shift():
    c = compile_expr_to_ccra(parse("shift(4, geo(1, 2) + arith(0, 1))"))
    assert cra_values(c, 5) == [4, 1, 3, 6, 11]
    assert check_copyless(c).ok


def test_compile_rejects_star():
    with pytest.raises(FragmentError):
        compile_expr_to_ccra(parse("star(fin[0, 1])"))


def test_compiled_machines_round_trip():
    for e in polyrat_exprs(seed=13, count=40):
        c = compile_expr_to_ccra(e)
        assert check_copyless(c).ok
        assert check_normal_form(c).ok
        expected = evaluate(e, 30)
        assert cra_values(c, 30) == expected
        assert evaluate(ccra_to_expr(c), 30) == expected


def test_constant_registers_may_be_read_twice_when_converting():
    c = Cra(
        registers=("x", "c"),
        n_states=1,
        delta=((0, {"x": parse_register_expr("x + c*c")}),),
        nu0={"x": Fraction(1), "c": Fraction(1)},
        mu={0: Var("x")},
    )
    assert not check_copyless(c).ok
    assert evaluate(ccra_to_expr(c), 5) == [1, 2, 3, 4, 5]
