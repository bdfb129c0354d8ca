"""Automata for the atoms and closure operations of the poly-rational fragment."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from src.errors import DomainError, FragmentError
from src.seqexpr.ast import Arith, Fin, Geo, Hadamard, SeqExpr, Shift, Shuffle, Sum
from src.seqexpr.evaluator import evaluate
from src.seqexpr.fragments import POLY_RAT, FragmentKind, fragment_of, require
from src.wa.automaton import WeightedAutomaton, sparse_rows, trim

logger = logging.getLogger(__name__)

_0 = Fraction(0)
_1 = Fraction(1)


def arith_automaton(a, b) -> WeightedAutomaton:
    """p and q both loop with weight 1, p → q has weight b; I = (1, 0), F = (a, 1)."""
    return WeightedAutomaton.build(2, [(0, 0, 1), (1, 1, 1), (0, 1, b)], [(0, 1)], [(0, a), (1, 1)])


def geo_automaton(a, lam) -> WeightedAutomaton:
    return WeightedAutomaton.build(1, [(0, 0, lam)], [(0, a)], [(0, 1)])


def fin_automaton(values: Sequence) -> WeightedAutomaton:
    m = len(values)
    if m == 0:
        return WeightedAutomaton.empty()
    return WeightedAutomaton.build(
        m,
        [(i, i + 1, 1) for i in range(m - 1)],
        [(0, 1)],
        [(i, v) for i, v in enumerate(values)],
    )


def union(a: WeightedAutomaton, b: WeightedAutomaton) -> WeightedAutomaton:
    """Disjoint union, trimmed; ⟦A ∪ B⟧ = ⟦A⟧ + ⟦B⟧."""
    n = a.n_states + b.n_states
    rows = [row + (_0,) * b.n_states for row in a.matrix]
    rows += [(_0,) * a.n_states + row for row in b.matrix]
    return trim(WeightedAutomaton(n, tuple(rows), a.initial + b.initial, a.final + b.final))


def hadamard(a: WeightedAutomaton, b: WeightedAutomaton) -> WeightedAutomaton:
    """Product automaton on the pairs (p, q) reachable from initial pairs; ⟦A × B⟧ = ⟦A⟧·⟦B⟧ term-wise."""
    out_a, out_b = sparse_rows(a), sparse_rows(b)
    index: dict[tuple[int, int], int] = {}
    pairs: list[tuple[int, int]] = []

    def state(pair: tuple[int, int]) -> int:
        if pair not in index:
            index[pair] = len(pairs)
            pairs.append(pair)
        return index[pair]

    initial = [(state((p, q)), a.initial[p] * b.initial[q]) for p in a.initial_states for q in b.initial_states]
    transitions = []
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        for p2, w in out_a[p]:
            for q2, v in out_b[q]:
                transitions.append((i, state((p2, q2)), w * v))
        i += 1
    final = [(i, a.final[p] * b.final[q]) for i, (p, q) in enumerate(pairs)]
    return trim(WeightedAutomaton.build(len(pairs), transitions, initial, final))


def shift(a: WeightedAutomaton, value) -> WeightedAutomaton:
    """New initial state 0 with final weight `value` and edges to the old initial states."""
    n = a.n_states + 1
    rows = [(_0,) + a.initial]
    rows += [(_0,) + row for row in a.matrix]
    initial = (_1,) + (_0,) * a.n_states
    final = (Fraction(value),) + a.final
    return trim(WeightedAutomaton(n, tuple(rows), initial, final))


def stretch(a: WeightedAutomaton, k: int) -> WeightedAutomaton:
    """A[k]: states (q, i), i < k; every transition of A becomes a path of length k."""
    if k < 1:
        raise DomainError(f"stretch factor must be positive, got {k}")
    if k == 1:
        return a
    n = a.n_states * k
    matrix = [[_0] * n for _ in range(n)]
    initial = [_0] * n
    final = [_0] * n
    for q in range(a.n_states):
        for i in range(k - 1):
            matrix[q * k + i][q * k + i + 1] = _1
        for q2, w in enumerate(a.matrix[q]):
            if w != 0:
                matrix[q * k + k - 1][q2 * k] = w
        initial[q * k] = a.initial[q]
        final[q * k] = a.final[q]
    return WeightedAutomaton(n, tuple(map(tuple, matrix)), tuple(initial), tuple(final))


def shuffle(children: Sequence[WeightedAutomaton]) -> WeightedAutomaton:
    """Child j contributes positions k·i + j: stretch by k, shift by j zeros, union."""
    k = len(children)
    if k == 0:
        raise DomainError("shuffle of no automata")
    result = WeightedAutomaton.empty()
    for j, child in enumerate(children):
        part = stretch(child, k)
        for _ in range(j):
            part = shift(part, 0)
        result = union(result, part)
    return trim(result)


@dataclass(frozen=True, slots=True)
class Lasso:
    """u(n) = tail[n] below len(tail); u(len(tail) + q·len(cycle) + r) = factor^q · cycle[r]."""

    tail: tuple[Fraction, ...]
    cycle: tuple[Fraction, ...]
    factor: Fraction

    @property
    def silent(self) -> bool:
        """The cycle only produces zeros, so any factor fits it."""
        return not any(self.cycle)

    def unroll(self, tail_length: int) -> "Lasso":
        tail, cycle = list(self.tail), list(self.cycle)
        while len(tail) < tail_length:
            head = cycle.pop(0)
            tail.append(head)
            cycle.append(head * self.factor)
        return Lasso(tuple(tail), tuple(cycle), self.factor)

    def widen(self, length: int) -> "Lasso":
        """The same sequence with a cycle of `length`, a multiple of the current one."""
        laps = length // len(self.cycle)
        cycle = tuple(v * self.factor**i for i in range(laps) for v in self.cycle)
        return Lasso(self.tail, cycle, self.factor**laps)

    def automaton(self) -> WeightedAutomaton:
        """A path over tail and cycle with weight-1 edges, closed by an edge of weight `factor`."""
        outputs = self.tail + self.cycle
        n = len(outputs)
        transitions = [(i, i + 1, 1) for i in range(n - 1)]
        if self.factor != 0:
            transitions.append((n - 1, len(self.tail), self.factor))
        return WeightedAutomaton.build(n, transitions, [(0, 1)], list(enumerate(outputs)))


def _lasso(e: SeqExpr) -> Lasso:
    match e:
        case Geo(a, lam):
            return Lasso((), (Fraction(a),), Fraction(lam))
        case Shift(a, child):
            inner = _lasso(child)
            return Lasso((Fraction(a),) + inner.tail, inner.cycle, inner.factor)
        case Shuffle(parts):
            children = [_lasso(p) for p in parts]
            tail_length = max(len(c.tail) for c in children)
            length = lcm(*(len(c.cycle) for c in children))
            children = [c.unroll(tail_length).widen(length) for c in children]
            factors = sorted({c.factor for c in children if not c.silent})
            if len(factors) > 1:
                raise DomainError(f"shuffled lassos close with different weights {factors[0]} and {factors[1]}")
            factor = factors[0] if factors else children[0].factor
            return Lasso(
                tuple(c.tail[m] for m in range(tail_length) for c in children),
                tuple(c.cycle[r] for r in range(length) for c in children),
                factor,
            )
    raise TypeError(f"not a Det-fragment expression: {e!r}")


def compile_det_expr_to_wa(e: SeqExpr) -> WeightedAutomaton:
    """Deterministic lasso automaton for an expression over Geo_λ, shift and shuffle.

    The shuffled children become lassos with one tail length and one cycle length and
    are merged position by position. Raises DomainError when their cycles close with
    different weights; no deterministic automaton exists then.
    """
    if not any(f.kind is FragmentKind.DET for f in fragment_of(e)):
        raise FragmentError("expression is not in a Det fragment")
    return _lasso(e).automaton()


def compile_expr_to_wa(e: SeqExpr) -> WeightedAutomaton:
    """Polynomially ambiguous automaton computing the sequence of a poly-rational expression.

    Det-fragment expressions get a deterministic lasso when one exists.
    """
    require(e, POLY_RAT)
    if any(f.kind is FragmentKind.DET for f in fragment_of(e)):
        try:
            a = compile_det_expr_to_wa(e)
            logger.debug("compiled Det-fragment expression to a %d-state lasso", a.n_states)
            return a
        except DomainError as err:
            logger.debug("no deterministic lasso: %s", err)
    a = _compile(e)
    logger.debug("compiled expression to %d states", a.n_states)
    return a


def _compile(e: SeqExpr) -> WeightedAutomaton:
    match e:
        case Arith(a, b):
            return trim(arith_automaton(a, b))
        case Geo(a, lam):
            return trim(geo_automaton(a, lam))
        case Fin(values):
            return trim(fin_automaton(values))
        case Sum(left, right):
            return union(_compile(left), _compile(right))
        case Hadamard(Fin(values), other) | Hadamard(other, Fin(values)):
            return trim(fin_automaton([u * v for u, v in zip(values, evaluate(other, len(values)))]))
        case Hadamard(left, right):
            return hadamard(_compile(left), _compile(right))
        case Shift(a, child):
            return shift(_compile(child), a)
        case Shuffle(parts):
            return shuffle([_compile(p) for p in parts])
    raise TypeError(f"not a poly-rational expression: {e!r}")
