"""Deterministic cost-register automata over a one-letter alphabet."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from src.cra.regexpr import RegisterExpr, RegisterPolynomial, Var, evaluate, is_linear, substitute
from src.errors import FormatError, OutputUndefined

logger = logging.getLogger(__name__)

# register -> image; registers without an entry keep their value
Substitution = Mapping[str, RegisterExpr]


@dataclass(frozen=True)
class Cra:
    """⟦C⟧(n) = ν₀ ∘ σ₁ ∘ ... ∘ σₙ ∘ μ(qₙ) along the unique run from `initial_state`.

    `delta[q] = (next state, substitution)`; `mu` is partial.
    """

    registers: tuple[str, ...]
    n_states: int
    delta: tuple[tuple[int, Substitution], ...]
    initial_state: int = 0
    nu0: Mapping[str, Fraction] = field(default_factory=dict)
    mu: Mapping[int, RegisterExpr] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.delta) != self.n_states:
            raise FormatError(f"delta must have one entry per state ({self.n_states})")
        if not 0 <= self.initial_state < max(self.n_states, 1):
            raise FormatError(f"initial state {self.initial_state} out of range")
        known = set(self.registers)
        for q, (nxt, sigma) in enumerate(self.delta):
            if not 0 <= nxt < self.n_states:
                raise FormatError(f"state {q} moves to unknown state {nxt}")
            unknown = set(sigma) - known
            if unknown:
                raise FormatError(f"state {q} updates unknown registers {sorted(unknown)}")

    def substitution(self, q: int) -> dict[str, RegisterExpr]:
        """Total substitution at q (identity where the update is silent)."""
        sigma = self.delta[q][1]
        return {x: sigma.get(x, Var(x)) for x in self.registers}

    def next_state(self, q: int) -> int:
        return self.delta[q][0]

    def initial_valuation(self) -> dict[str, Fraction]:
        return {x: Fraction(self.nu0.get(x, 0)) for x in self.registers}


def step(c: Cra, q: int, valuation: Mapping[str, Fraction]) -> tuple[int, dict[str, Fraction]]:
    sigma = c.substitution(q)
    return c.next_state(q), {x: evaluate(sigma[x], valuation) for x in c.registers}


def run(c: Cra, n: int) -> tuple[int, dict[str, Fraction]]:
    """State and valuation after n steps."""
    q, valuation = c.initial_state, c.initial_valuation()
    for _ in range(n):
        q, valuation = step(c, q, valuation)
    return q, valuation


def output(c: Cra, q: int, valuation: Mapping[str, Fraction]) -> Fraction:
    if q not in c.mu:
        raise OutputUndefined(q)
    return evaluate(c.mu[q], valuation)


def eval_cra(c: Cra, n: int) -> Fraction:
    q, valuation = run(c, n)
    return output(c, q, valuation)


def cra_values(c: Cra, n: int) -> list[Fraction]:
    out = []
    q, valuation = c.initial_state, c.initial_valuation()
    for _ in range(n):
        out.append(output(c, q, valuation))
        q, valuation = step(c, q, valuation)
    return out


def compose_substitutions(s1: Substitution, s2: Substitution, registers) -> dict[str, RegisterExpr]:
    """s1 then s2: (s1∘s2)(x) = s2(x) with every y replaced by s1(y).

    Linear images are expanded to the form Σ aᵢxᵢ + b; others stay as built.
    """
    full1 = {x: s1.get(x, Var(x)) for x in registers}
    out = {}
    for x in registers:
        image = substitute(s2.get(x, Var(x)), full1)
        if is_linear(image):
            image = RegisterPolynomial.of(image).to_expr()
        out[x] = image
    return out


def compose_path(c: Cra, states) -> dict[str, RegisterExpr]:
    """Substitution of the run segment that reads the letter at each of `states` in turn."""
    total = {x: Var(x) for x in c.registers}
    for q in states:
        total = compose_substitutions(total, c.substitution(q), c.registers)
    return total
