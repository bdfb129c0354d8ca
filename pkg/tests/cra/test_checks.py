from fractions import Fraction

import pytest

from src.cra.checks import (
    check_copyless,
    check_copyless_modulo_constants,
    check_linear,
    check_normal_form,
    constant_registers,
    require_copyless,
    require_normal_form,
)
from src.cra.machine import Cra
from src.cra.regexpr import parse_register_expr
from src.errors import NoNormalFormOrder, NotCopyless
from src.samples import fibonacci_machine


def machine(updates: dict[str, str], registers=("x", "y"), mu="x") -> Cra:
    return Cra(
        registers=registers,
        n_states=1,
        delta=((0, {x: parse_register_expr(e) for x, e in updates.items()}),),
        nu0={x: Fraction(1) for x in registers},
        mu={0: parse_register_expr(mu)},
    )


def test_fibonacci_machine_copies_x1():
    result = check_copyless(fibonacci_machine())
    assert not result.ok
    assert (result.register, result.state) == ("x1", 0)
    with pytest.raises(NotCopyless) as info:
        require_copyless(fibonacci_machine())
    assert info.value.register == "x1"


def test_copyless_update():
    assert check_copyless(machine({"x": "x + y", "y": "3"})).ok
    assert not check_copyless(machine({"x": "x*x"})).ok


def test_reading_a_constant_register_twice_is_a_copy():
    c = machine({"x": "x + c*c"}, registers=("x", "c"))
    assert constant_registers(c) == {"c"}
    result = check_copyless(c)
    assert (result.ok, result.register, result.state) == (False, "c", 0)
    assert not check_copyless(machine({"x": "x + c", "y": "y + c"}, registers=("x", "y", "c"))).ok
    assert check_copyless_modulo_constants(c).ok
    with pytest.raises(NotCopyless):
        require_copyless(c)
    require_copyless(c, modulo_constants=True)


def test_linear():
    assert check_linear(machine({"x": "3*x + y"}))
    assert not check_linear(machine({"x": "x*y"}))
    assert not check_linear(machine({}, mu="x*y"))


def test_normal_form_order():
    c = machine({"x": "x + y", "y": "y + 1"})
    assert check_normal_form(c).order == ("x", "y")
    assert require_normal_form(c) == ("x", "y")
    # declaration order does not matter
    c = machine({"x": "x + 1", "y": "x + y"})
    assert check_normal_form(c).order == ("y", "x")


def test_swap_has_no_normal_form():
    c = machine({"x": "y", "y": "x"})
    assert check_copyless(c).ok
    result = check_normal_form(c)
    assert not result.ok
    assert result.cycle == ("x", "y", "x")
    with pytest.raises(NoNormalFormOrder):
        require_normal_form(c)


def test_fibonacci_dependency_cycle():
    assert check_normal_form(fibonacci_machine()).cycle == ("x0", "x1", "x0")
