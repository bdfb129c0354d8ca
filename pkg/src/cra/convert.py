"""Copyless register machines in normal form to poly-rational expressions.

The run of a one-letter machine is a lasso q₀ ... q_{k-1} (p₀ ... p_{ℓ-1})^ω. Past the
tail, positions k + ℓi + j are read at p_j after i full laps, so each offset j is the
sequence ν'∘σ'^i∘μ(p_j) for the valuation ν' on first reaching p_j and the substitution
σ' of one lap starting there. Copylessness plus a register order make every register of
σ' either settle to a constant after at most one step per register, or follow
x ↦ a·x + b once the registers it reads have settled.
"""

import logging
from fractions import Fraction
from typing import Mapping

from src.cra.checks import require_copyless, require_normal_form
from src.cra.machine import Cra, compose_path, output, run, step
from src.cra.regexpr import Add, Const, Mul, RegisterExpr, RegisterPolynomial, Var
from src.errors import NotCopyless, OutputUndefined, StabilizationError
from src.seqexpr.ast import Arith, Geo, Hadamard, SeqExpr, Shift, Shuffle, Sum
from src.seqexpr.builders import constant

logger = logging.getLogger(__name__)


def state_lasso(c: Cra) -> tuple[list[int], list[int]]:
    """(tail states, loop states) of the unique run."""
    seen: dict[int, int] = {}
    order: list[int] = []
    q = c.initial_state
    while q not in seen:
        seen[q] = len(order)
        order.append(q)
        q = c.next_state(q)
    k = seen[q]
    return order[:k], order[k:]


def _prepend(values: list[Fraction], body: SeqExpr) -> SeqExpr:
    for v in reversed(values):
        body = Shift(v, body)
    return body


class _LapSequences:
    """Register sequences u_x(i) = (ν' ∘ σ'^i)(x) for one loop offset."""

    def __init__(self, c: Cra, state: int, valuation: Mapping[str, Fraction], lap: Mapping[str, RegisterExpr]):
        self.state = state
        self.registers = c.registers
        self.valuation = dict(valuation)
        self.lap = {x: RegisterPolynomial.of(e) for x, e in lap.items()}
        self.bound = len(c.registers) + 1
        self._settled: dict[str, int] = {}
        self._cache: dict[str, SeqExpr] = {}

    def values(self, count: int) -> list[dict[str, Fraction]]:
        vals = [self.valuation]
        for _ in range(count - 1):
            prev = vals[-1]
            vals.append({x: self.lap[x].evaluate(prev) for x in self.registers})
        return vals

    def settle_index(self, x: str) -> int:
        """Least N >= 1 with σ'^N(x) = σ'^(N+1)(x) as polynomials (so constant from N on)."""
        if x in self._settled:
            return self._settled[x]
        current = self.lap[x]
        for n in range(1, self.bound + 1):
            nxt = current.substitute(self.lap)
            if nxt == current:
                self._settled[x] = n
                return n
            current = nxt
        raise StabilizationError(x, self.bound)

    def register(self, x: str) -> SeqExpr:
        if x not in self._cache:
            self._cache[x] = self._build(x)
        return self._cache[x]

    def _build(self, x: str) -> SeqExpr:
        image = self.lap[x]
        if x not in image.variables():
            n = self.settle_index(x)
            vals = self.values(n + 1)
            return _prepend([v[x] for v in vals[:n]], constant(vals[n][x]))
        if image.degree_in(x) != 1:
            raise NotCopyless(x, self.state)
        others = image.variables() - {x}
        n = max((self.settle_index(y) for y in others), default=0)
        vals = self.values(n + 1)
        settled = {y: RegisterPolynomial.constant(vals[n][y]) for y in others}
        affine = image.substitute(settled)
        a = sum((coef for m, coef in affine.terms if m == (x,)), Fraction(0))
        b = affine.constant_term()
        start = vals[n][x]
        if a == 1:
            body: SeqExpr = Arith(start, b)
        elif a == 0:
            body = Shift(start, constant(b))
        else:
            fixed = b / (a - 1)
            body = Sum(Geo(start + fixed, a), Geo(-fixed, Fraction(1)))
        logger.debug("register %s: affine %s*x + %s after %d laps", x, a, b, n)
        return _prepend([v[x] for v in vals[:n]], body)

    def expression(self, e: RegisterExpr) -> SeqExpr:
        match e:
            case Var(name):
                return self.register(name)
            case Const(value):
                return constant(value)
            case Add(l, r):
                return Sum(self.expression(l), self.expression(r))
            case Mul(l, r):
                return Hadamard(self.expression(l), self.expression(r))
        raise TypeError(f"not a register expression: {e!r}")


def ccra_to_expr(c: Cra) -> SeqExpr:
    require_copyless(c, modulo_constants=True)
    require_normal_form(c)
    tail, loop = state_lasso(c)
    k, ell = len(tail), len(loop)

    tail_values = []
    q, valuation = c.initial_state, c.initial_valuation()
    for _ in range(k):
        tail_values.append(output(c, q, valuation))
        q, valuation = step(c, q, valuation)

    parts = []
    for j in range(ell):
        p = loop[j]
        if p not in c.mu:
            raise OutputUndefined(p)
        _, entry = run(c, k + j)
        lap = compose_path(c, loop[j:] + loop[:j])
        parts.append(_LapSequences(c, p, entry, lap).expression(c.mu[p]))
    body = parts[0] if ell == 1 else Shuffle(tuple(parts))
    logger.debug("machine lasso: tail %d, loop %d", k, ell)
    return _prepend(tail_values, body)
