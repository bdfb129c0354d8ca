"""Expressions for deterministic and finitely ambiguous automata.

A trimmed deterministic automaton is a lasso: a tail of m states followed by a cycle of
length ℓ (or just a path). Its sequence is m explicit terms followed by ℓ interleaved
geometric progressions sharing the ratio of the cycle.
"""

from fractions import Fraction

from src.errors import ClassMismatch
from src.seqexpr.ast import Geo, SeqExpr, Shift, Shuffle
from src.seqexpr.builders import shift_by, stretch, sum_all, zero
from src.wa.ambiguity import Ambiguity, classify_ambiguity
from src.wa.automaton import WeightedAutomaton, trim
from src.wa.chained import decompose_chained_loops


def lasso_to_expr(a: WeightedAutomaton) -> SeqExpr:
    report = classify_ambiguity(a)
    if report.ambiguity is not Ambiguity.DETERMINISTIC:
        raise ClassMismatch(f"expected a deterministic automaton, got one that is {report.describe()}")
    a = trim(a)
    if a.n_states == 0:
        return zero()
    (q,) = a.initial_states
    visited: dict[int, int] = {}
    states: list[int] = []
    prefix: list[Fraction] = []  # I(q₀)·M(q₀,q₁)···M(q_{i-1},q_i)
    weight = a.initial[q]
    while q is not None and q not in visited:
        visited[q] = len(states)
        states.append(q)
        prefix.append(weight)
        successors = a.successors(q)
        if not successors:
            q = None
            break
        nxt = successors[0]
        weight *= a.matrix[q][nxt]
        q = nxt

    outputs = [w * a.final[p] for w, p in zip(prefix, states)]
    if q is None:
        tail, body = outputs, zero()
    else:
        m = visited[q]
        lam = weight / prefix[m]  # product of the cycle's weights
        ell = len(states) - m
        atoms = tuple(Geo(outputs[m + j], lam) for j in range(ell))
        tail = outputs[:m]
        body = atoms[0] if ell == 1 else Shuffle(atoms)
    for value in reversed(tail):
        body = Shift(value, body)
    return body


def finwa_to_expr(a: WeightedAutomaton) -> SeqExpr:
    """Sum over the chained loops, each a lasso: x^j · w / (1 - λx^ℓ) or the single term w·x^j."""
    report = classify_ambiguity(a)
    if not report.finite:
        raise ClassMismatch(f"expected a finitely ambiguous automaton, got one that is {report.describe()}")
    terms = []
    for c in decompose_chained_loops(a):
        w = c.initial_weight
        for pw in c.path_weights:
            w *= pw
        loops = [loop for loop in c.loops if loop is not None]
        if loops:
            (loop,) = loops
            body = stretch(Geo(w, loop.lam), loop.ell)
        else:
            body = Shift(w, zero())
        terms.append(shift_by(body, c.length))
    return sum_all(terms)
