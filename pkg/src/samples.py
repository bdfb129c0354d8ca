"""Built-in worked examples, listed and evaluated by the `samples` command."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from src.cra.machine import Cra
from src.cra.regexpr import Add, Var
from src.lrs.recurrence import Lrs
from src.models.representation import Representation
from src.seqexpr.parser import parse
from src.wa.witnesses import (
    chained_loop_a1,
    chained_loop_a2,
    chained_loop_a3,
    fibonacci_automaton,
    naturals_witness,
    power_sum_witness,
    shuffle_power_witness,
)


@dataclass(frozen=True)
class Sample:
    name: str
    description: str
    build: Callable[[], Representation]


def fibonacci_recurrence() -> Lrs:
    return Lrs((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1)))


def fibonacci_machine() -> Cra:
    """x₀ := x₁, x₁ := x₀ + x₁ from (0, 1), output x₀. Reads x₁ twice, so it is not copyless."""
    return Cra(
        registers=("x0", "x1"),
        n_states=1,
        delta=((0, {"x0": Var("x1"), "x1": Add(Var("x0"), Var("x1"))}),),
        nu0={"x0": Fraction(0), "x1": Fraction(1)},
        mu={0: Var("x0")},
    )


def _wa(factory) -> Callable[[], Representation]:
    return lambda: Representation.wa(factory())


SAMPLES: tuple[Sample, ...] = (
    Sample("a1", "two-state chained loop, series 2/(1 - 3x^2)", _wa(chained_loop_a1)),
    Sample("a2", "one-state chained loop, series 5/(1 - 5x)", _wa(chained_loop_a2)),
    Sample("a3", "a1 then a2, series 10x/((1 - 3x^2)(1 - 5x))", _wa(chained_loop_a3)),
    Sample("fibonacci-lrs", "u(n) = u(n-1) + u(n-2) from 0, 1", lambda: Representation.lrs(fibonacci_recurrence())),
    Sample("fibonacci-wa", "Fibonacci automaton, exponentially ambiguous", _wa(fibonacci_automaton)),
    Sample("fibonacci-cra", "Fibonacci register machine, not copyless", lambda: Representation.ccra(fibonacci_machine())),
    Sample("shuffle-powers", "shuffle of 2^n and 1, unambiguous but not deterministic", _wa(shuffle_power_witness)),
    Sample("power-sum-3", "1^n + 2^n + 3^n, 3-ambiguous", _wa(lambda: power_sum_witness(2))),
    Sample("naturals", "u(n) = n, polynomially ambiguous of degree 1", _wa(naturals_witness)),
    Sample("squares", "n^2 as a Hadamard product", lambda: Representation.expr(parse("arith(0,1) * arith(0,1)"))),
)


def find_sample(name: str) -> Sample | None:
    return next((s for s in SAMPLES if s.name == name), None)
