"""Chained loops: a path of states, each optionally carrying one cycle.

A polynomially ambiguous automaton is the union of its chained loops. A run enters each
cycle component once, winds around the cycle some number of full laps at the entry
state, walks part of the cycle and leaves; recording the entry state's cycle as a loop
and the partial walk as path states makes this decomposition a bijection on runs.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from src.config import settings
from src.errors import BudgetExceeded, ExponentialAmbiguity
from src.ratmath.polynomial import Polynomial, product
from src.ratmath.ratfunc import RationalFunction
from src.wa.ambiguity import Ambiguity, classify_ambiguity
from src.wa.automaton import WeightedAutomaton, trim
from src.wa.constructions import union
from src.wa.graph import SupportGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Loop:
    lam: Fraction  # product of the cycle's weights
    ell: int  # cycle length


@dataclass(frozen=True, slots=True)
class ChainedLoop:
    path_states: tuple[int, ...]
    path_weights: tuple[Fraction, ...]  # edge path_states[i] -> path_states[i + 1]
    loops: tuple[Loop | None, ...]
    initial_weight: Fraction

    @property
    def length(self) -> int:
        return len(self.path_states) - 1

    def loop_count(self) -> int:
        return sum(1 for loop in self.loops if loop is not None)


def _entry_loop(graph: SupportGraph, state: int) -> Loop:
    a = graph.automaton
    cycle = graph.cycle(state)
    lam = Fraction(1)
    for i, p in enumerate(cycle):
        lam *= a.matrix[p][cycle[(i + 1) % len(cycle)]]
    return Loop(lam, len(cycle))


def decompose_chained_loops(a: WeightedAutomaton, budget: int | None = None) -> list[ChainedLoop]:
    """All chained loops of a polynomially ambiguous automaton; Σ of their values is ⟦A⟧.

    Final weights are folded into the initial weight, so every chained loop ends with
    final weight 1.
    """
    budget = settings.chain_budget if budget is None else budget
    a = trim(a)
    report = classify_ambiguity(a)
    if report.ambiguity is Ambiguity.EXPONENTIALLY_AMBIGUOUS:
        raise ExponentialAmbiguity(report.witness_state)
    graph = SupportGraph(a)
    loops_at: dict[int, Loop] = {}
    result: list[ChainedLoop] = []

    def loop_entering(prev: int | None, q: int) -> Loop | None:
        component = graph.components[graph.component_of[q]]
        if not component.has_cycle:
            return None
        if prev is not None and graph.component_of[prev] == graph.component_of[q]:
            return None
        if q not in loops_at:
            loops_at[q] = _entry_loop(graph, q)
        return loops_at[q]

    for q0 in a.initial_states:
        stack = [((q0,), (), (loop_entering(None, q0),))]
        while stack:
            states, weights, loops = stack.pop()
            last = states[-1]
            if a.final[last] != 0:
                result.append(ChainedLoop(states, weights, loops, a.initial[q0] * a.final[last]))
                if len(result) > budget:
                    raise BudgetExceeded("chained loops", budget)
            for q in reversed(graph.successors[last]):
                if q in states:
                    continue
                stack.append(
                    (states + (q,), weights + (a.matrix[last][q],), loops + (loop_entering(last, q),))
                )
    logger.debug("decomposed %d-state automaton into %d chained loops", a.n_states, len(result))
    return result


def chained_loop_series(c: ChainedLoop) -> RationalFunction:
    """w · Π(weight·x) over the path · Π 1/(1 - λx^ℓ) over the loops."""
    coefficient = prod(c.path_weights, start=c.initial_weight)
    num = Polynomial.monomial(coefficient, c.length)
    den = product([Polynomial.binomial(loop.lam, loop.ell) for loop in c.loops if loop is not None])
    return RationalFunction.of(num, den)


def concatenate(c1: ChainedLoop, c2: ChainedLoop, weight=1) -> ChainedLoop:
    """c1 then c2 joined by one edge; the series is weight·x·S₁·S₂."""
    offset = max(c1.path_states) + 1
    return ChainedLoop(
        c1.path_states + tuple(q + offset for q in c2.path_states),
        c1.path_weights + (Fraction(weight),) + c2.path_weights,
        c1.loops + c2.loops,
        c1.initial_weight * c2.initial_weight,
    )


def chained_loop_to_wa(c: ChainedLoop) -> WeightedAutomaton:
    """Path states first, then ℓ - 1 helper states per loop; the loop's weight sits on its first edge."""
    k = len(c.path_states)
    transitions = [(i, i + 1, w) for i, w in enumerate(c.path_weights)]
    n = k
    for i, loop in enumerate(c.loops):
        if loop is None:
            continue
        if loop.ell == 1:
            transitions.append((i, i, loop.lam))
            continue
        helpers = list(range(n, n + loop.ell - 1))
        n += loop.ell - 1
        cycle = [i] + helpers + [i]
        transitions.append((cycle[0], cycle[1], loop.lam))
        transitions += [(p, q, 1) for p, q in zip(cycle[1:], cycle[2:])]
    return WeightedAutomaton.build(n, transitions, [(0, c.initial_weight)], [(k - 1, 1)])


def union_of_chained_loops(loops: Sequence[ChainedLoop]) -> WeightedAutomaton:
    result = WeightedAutomaton.empty()
    for c in loops:
        result = union(result, chained_loop_to_wa(c))
    return result
