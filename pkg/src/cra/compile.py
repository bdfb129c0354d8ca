"""Poly-rational expressions to copyless register machines.

Each subexpression becomes a component: a start state, a step function giving the next
state and register updates, and an output per state. States are built lazily and the
reachable part is numbered breadth-first at the end.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable

from src.cra.machine import Cra
from src.cra.regexpr import Add, Const, Mul, RegisterExpr, Var
from src.seqexpr.ast import Arith, Fin, Geo, Hadamard, SeqExpr, Shift, Shuffle, Sum
from src.seqexpr.fragments import POLY_RAT, require

logger = logging.getLogger(__name__)

Step = Callable[[Hashable], tuple[Hashable, dict[str, RegisterExpr]]]
Output = Callable[[Hashable], RegisterExpr]


@dataclass
class Component:
    registers: list[str]
    nu0: dict[str, Fraction]
    start: Hashable
    step: Step
    output: Output


class _Compiler:
    def __init__(self):
        self._names = itertools.count()

    def fresh(self) -> str:
        return f"x{next(self._names)}"

    def compile(self, e: SeqExpr) -> Component:
        match e:
            case Geo(a, lam):
                x = self.fresh()
                return Component([x], {x: a}, "loop", lambda s: ("loop", {x: Mul(Const(lam), Var(x))}), lambda s: Var(x))
            case Arith(a, b):
                x = self.fresh()
                return Component([x], {x: a}, "loop", lambda s: ("loop", {x: Add(Var(x), Const(b))}), lambda s: Var(x))
            case Fin(values):
                m = len(values)
                return Component(
                    [],
                    {},
                    0,
                    lambda s: (min(s + 1, m), {}),
                    lambda s: Const(values[s] if s < m else Fraction(0)),
                )
            case Sum(left, right) | Hadamard(left, right):
                combine = Add if isinstance(e, Sum) else Mul
                return self._product(self.compile(left), self.compile(right), combine)
            case Shift(a, child):
                return self._shift(a, self.compile(child))
            case Shuffle(parts):
                return self._shuffle([self.compile(p) for p in parts])
        raise TypeError(f"not a poly-rational expression: {e!r}")

    @staticmethod
    def _product(c1: Component, c2: Component, combine) -> Component:
        def step(s):
            n1, u1 = c1.step(s[0])
            n2, u2 = c2.step(s[1])
            return (n1, n2), {**u1, **u2}

        return Component(
            c1.registers + c2.registers,
            {**c1.nu0, **c2.nu0},
            (c1.start, c2.start),
            step,
            lambda s: combine(c1.output(s[0]), c2.output(s[1])),
        )

    @staticmethod
    def _shift(a: Fraction, c: Component) -> Component:
        def step(s):
            if s == ("tail",):
                return ("in", c.start), {}
            nxt, updates = c.step(s[1])
            return ("in", nxt), updates

        def output(s):
            return Const(a) if s == ("tail",) else c.output(s[1])

        return Component(c.registers, c.nu0, ("tail",), step, output)

    @staticmethod
    def _shuffle(children: list[Component]) -> Component:
        k = len(children)

        def step(s):
            phase, states = s
            nxt, updates = children[phase].step(states[phase])
            states = states[:phase] + (nxt,) + states[phase + 1 :]
            return ((phase + 1) % k, states), updates

        def output(s):
            phase, states = s
            return children[phase].output(states[phase])

        registers = [x for c in children for x in c.registers]
        nu0 = {x: v for c in children for x, v in c.nu0.items()}
        return Component(registers, nu0, (0, tuple(c.start for c in children)), step, output)


def materialize(component: Component) -> Cra:
    """Number the reachable states breadth-first from the start state."""
    index = {component.start: 0}
    queue = deque([component.start])
    delta: list[tuple[int, dict[str, RegisterExpr]]] = []
    mu: dict[int, RegisterExpr] = {}
    while queue:
        s = queue.popleft()
        nxt, updates = component.step(s)
        if nxt not in index:
            index[nxt] = len(index)
            queue.append(nxt)
        delta.append((index[nxt], updates))
        mu[index[s]] = component.output(s)
    return Cra(
        registers=tuple(component.registers),
        n_states=len(delta),
        delta=tuple(delta),
        initial_state=0,
        nu0=dict(component.nu0),
        mu=mu,
    )


def compile_expr_to_ccra(e: SeqExpr) -> Cra:
    require(e, POLY_RAT)
    machine = materialize(_Compiler().compile(e))
    logger.debug("compiled expression to %d states, %d registers", machine.n_states, len(machine.registers))
    return machine
