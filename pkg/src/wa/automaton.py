"""Weighted automata over (ℚ, +, ·) on a one-letter alphabet."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from src.config import settings
from src.errors import BudgetExceeded, FormatError
from src.ratmath.matrix import dot

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class WeightedAutomaton:
    """A = (Q, M, I, F) with Q = {0, ..., n_states - 1}; ⟦A⟧(n) = Iᵗ Mⁿ F.

    Zero entries are absent transitions: the support graph has p → q iff M[p][q] != 0.
    """

    n_states: int
    matrix: tuple[tuple[Fraction, ...], ...]
    initial: tuple[Fraction, ...]
    final: tuple[Fraction, ...]

    def __post_init__(self):
        n = self.n_states
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise FormatError(f"transition matrix must be {n}x{n}")
        if len(self.initial) != n or len(self.final) != n:
            raise FormatError(f"initial and final vectors must have length {n}")

    @classmethod
    def build(cls, n_states: int, transitions, initial, final) -> "WeightedAutomaton":
        """From sparse entries: transitions [(p, q, w)], initial/final [(q, w)]. Repeated entries add up."""
        matrix = [[Fraction(0)] * n_states for _ in range(n_states)]
        ivec = [Fraction(0)] * n_states
        fvec = [Fraction(0)] * n_states
        try:
            for p, q, w in transitions:
                matrix[p][q] += Fraction(w)
            for q, w in initial:
                ivec[q] += Fraction(w)
            for q, w in final:
                fvec[q] += Fraction(w)
        except IndexError:
            raise FormatError(f"state index out of range for {n_states} states") from None
        return cls(n_states, tuple(map(tuple, matrix)), tuple(ivec), tuple(fvec))

    @classmethod
    def empty(cls) -> "WeightedAutomaton":
        return cls(0, (), (), ())

    def successors(self, p: int) -> list[int]:
        return [q for q, w in enumerate(self.matrix[p]) if w != 0]

    def edges(self) -> list[tuple[int, int, Fraction]]:
        return [
            (p, q, w)
            for p, row in enumerate(self.matrix)
            for q, w in enumerate(row)
            if w != 0
        ]

    @property
    def initial_states(self) -> list[int]:
        return [q for q, w in enumerate(self.initial) if w != 0]

    @property
    def final_states(self) -> list[int]:
        return [q for q, w in enumerate(self.final) if w != 0]

    def restrict(self, keep: Sequence[int]) -> "WeightedAutomaton":
        """Sub-automaton on `keep`, renumbered in the given order."""
        return WeightedAutomaton(
            len(keep),
            tuple(tuple(self.matrix[p][q] for q in keep) for p in keep),
            tuple(self.initial[q] for q in keep),
            tuple(self.final[q] for q in keep),
        )


def sparse_rows(a: WeightedAutomaton) -> list[list[tuple[int, Fraction]]]:
    return [[(q, w) for q, w in enumerate(row) if w != 0] for row in a.matrix]


def _step(row: list[Fraction], rows: list[list[tuple[int, Fraction]]]) -> list[Fraction]:
    out = [Fraction(0)] * len(rows)
    for p, v in enumerate(row):
        if v:
            for q, w in rows[p]:
                out[q] += v * w
    return out


def eval_matrix(a: WeightedAutomaton, n: int) -> Fraction:
    """Iᵗ Mⁿ F by n vector-matrix products."""
    if a.n_states == 0:
        return Fraction(0)
    rows = sparse_rows(a)
    row = list(a.initial)
    for _ in range(n):
        row = _step(row, rows)
    return dot(row, a.final)


def values(a: WeightedAutomaton, n: int) -> list[Fraction]:
    """⟦A⟧(0), ..., ⟦A⟧(n-1)."""
    if a.n_states == 0:
        return [Fraction(0)] * n
    rows = sparse_rows(a)
    out = []
    row = list(a.initial)
    for _ in range(n):
        out.append(dot(row, a.final))
        row = _step(row, rows)
    return out


def eval_runs(a: WeightedAutomaton, n: int, budget: int | None = None) -> Fraction:
    """Σ over accepting runs of length n of I(q₀)·ΠM·F(q_n), by explicit enumeration."""
    budget = settings.run_budget if budget is None else budget
    successors = [a.successors(p) for p in range(a.n_states)]
    total = Fraction(0)
    runs = 0
    stack = [(q, 0, a.initial[q]) for q in reversed(a.initial_states)]
    while stack:
        state, length, weight = stack.pop()
        if length == n:
            if a.final[state] != 0:
                runs += 1
                if runs > budget:
                    raise BudgetExceeded("accepting runs", budget)
                total += weight * a.final[state]
            continue
        for q in reversed(successors[state]):
            stack.append((q, length + 1, weight * a.matrix[state][q]))
    return total


def run_counts(a: WeightedAutomaton, n: int) -> list[int]:
    """Numbers of accepting runs of lengths 0, ..., n-1 in the support graph."""
    if a.n_states == 0:
        return [0] * n
    counts = [1 if w != 0 else 0 for w in a.initial]
    successors = [a.successors(p) for p in range(a.n_states)]
    finals = a.final_states
    out = []
    for _ in range(n):
        out.append(sum(counts[q] for q in finals))
        nxt = [0] * a.n_states
        for p, c in enumerate(counts):
            if c:
                for q in successors[p]:
                    nxt[q] += c
        counts = nxt
    return out


def count_runs(a: WeightedAutomaton, n: int) -> int:
    """Number of accepting runs of length n in the support graph."""
    return run_counts(a, n + 1)[n]


def ambiguity_profile(a: WeightedAutomaton, n: int) -> list[int]:
    return run_counts(a, n)


def _closure(starts: list[int], neighbours: list[list[int]]) -> set[int]:
    seen = set(starts)
    stack = list(starts)
    while stack:
        p = stack.pop()
        for q in neighbours[p]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def useful_states(a: WeightedAutomaton) -> list[int]:
    forward = [a.successors(p) for p in range(a.n_states)]
    backward: list[list[int]] = [[] for _ in range(a.n_states)]
    for p, q, _ in a.edges():
        backward[q].append(p)
    reachable = _closure(a.initial_states, forward)
    coreachable = _closure(a.final_states, backward)
    return sorted(reachable & coreachable)


def trim(a: WeightedAutomaton) -> WeightedAutomaton:
    """Keep the states that lie on some initial → final path; the semantics is unchanged."""
    keep = useful_states(a)
    if len(keep) == a.n_states:
        return a
    logger.debug("trim: %d of %d states kept", len(keep), a.n_states)
    return a.restrict(keep)
