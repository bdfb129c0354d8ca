"""Text and JSON renderings of results. Deterministic for identical inputs."""

from fractions import Fraction
from typing import Sequence

from src.cra.machine import Cra
from src.cra.regexpr import to_text as register_text
from src.errors import PolyRatError
from src.formats.codec import to_document
from src.lrs.recurrence import Lrs
from src.models.representation import Kind, Representation
from src.ratmath.pfrac import PartialFractionTerm
from src.ratmath.polynomial import Polynomial
from src.ratmath.rational import format_rational
from src.resolver import ClassifyReport
from src.seqexpr.parser import to_text
from src.wa.automaton import WeightedAutomaton
from src.wa.chained import ChainedLoop, chained_loop_series


def terms_text(terms: Sequence[Fraction]) -> str:
    return " ".join(format_rational(t) for t in terms)


def _weights(pairs) -> str:
    return ", ".join(f"{q}:{format_rational(w)}" for q, w in pairs) or "none"


def automaton_text(a: WeightedAutomaton) -> str:
    lines = [
        f"states: {a.n_states}",
        "initial: " + _weights((q, a.initial[q]) for q in a.initial_states),
        "final: " + _weights((q, a.final[q]) for q in a.final_states),
    ]
    lines += [f"  {p} -> {q} : {format_rational(w)}" for p, q, w in a.edges()]
    return "\n".join(lines)


def machine_text(c: Cra) -> str:
    lines = [
        "registers: " + " ".join(c.registers),
        "nu0: " + ", ".join(f"{x}={format_rational(c.initial_valuation()[x])}" for x in c.registers),
        f"initial state: {c.initial_state}",
    ]
    for q, (nxt, sigma) in enumerate(c.delta):
        updates = "; ".join(f"{x} := {register_text(e)}" for x, e in sigma.items()) or "(no updates)"
        out = f"  out {register_text(c.mu[q])}" if q in c.mu else ""
        lines.append(f"  {q} -> {nxt}: {updates}{out}")
    return "\n".join(lines)


def recurrence_text(l: Lrs) -> str:
    if l.order == 0:
        return "u(n) = 0"
    rhs = " + ".join(f"{format_rational(a)}*u(n-{i})" for i, a in enumerate(l.coeffs, start=1))
    return f"u(n) = {rhs}; u(0..{l.order - 1}) = {terms_text(l.init)}"


def representation_text(rep: Representation) -> str:
    match rep.kind:
        case Kind.EXPR:
            return to_text(rep.value)
        case Kind.SERIES:
            return rep.value.to_text()
        case Kind.LRS:
            return recurrence_text(rep.value)
        case Kind.WA:
            return automaton_text(rep.value)
        case Kind.CCRA:
            return machine_text(rep.value)
    raise ValueError(f"unknown representation kind {rep.kind}")


def classify_text(report: ClassifyReport) -> str:
    lines = [f"{report.label}:"]
    if report.fragments is not None:
        lines.append("  fragments: " + (", ".join(report.fragments) or "none"))
    if report.ambiguity is not None:
        lines.append(f"  ambiguity: {report.ambiguity.describe()}")
    if report.copyless is not None:
        if report.copyless.ok:
            lines.append("  copyless: yes")
        else:
            lines.append(f"  copyless: no (register {report.copyless.register} copied at state {report.copyless.state})")
    if report.linear is not None:
        lines.append(f"  linear: {'yes' if report.linear else 'no'}")
    if report.normal_form is not None:
        nf = report.normal_form
        lines.append(
            "  normal form: " + (" < ".join(nf.order) if nf.ok else "none, cycle " + " -> ".join(nf.cycle))
        )
    if report.series is not None:
        lines.append(f"  series: {report.series}")
    if report.verdict is not None:
        v = report.verdict
        if v.is_polyrat:
            factors = " ".join(f"({f.base.to_text()})^{f.k}" for f in v.certificate.factors)
            lines.append("  poly-rational: yes" + (f", denominator divides {factors}" if factors else ""))
        else:
            lines.append(f"  poly-rational: no up to exponent bound {v.max_ell} (stuck factor {v.witness})")
    return "\n".join(lines)


def classify_document(report: ClassifyReport) -> dict:
    doc: dict = {"input": report.label, "kind": report.kind.value}
    if report.fragments is not None:
        doc["fragments"] = list(report.fragments)
    if report.ambiguity is not None:
        a = report.ambiguity
        doc["ambiguity"] = {"class": a.ambiguity.value, "k": a.k, "degree": a.degree, "witness_state": a.witness_state}
    if report.copyless is not None:
        doc["copyless"] = {"ok": report.copyless.ok, "register": report.copyless.register, "state": report.copyless.state}
    if report.linear is not None:
        doc["linear"] = report.linear
    if report.normal_form is not None:
        nf = report.normal_form
        doc["normal_form"] = {"order": list(nf.order) if nf.ok else None, "cycle": None if nf.ok else list(nf.cycle)}
    if report.series is not None:
        doc["series"] = to_document(Representation.series(report.series))
    if report.verdict is not None:
        v = report.verdict
        doc["polyrat"] = {
            "is_polyrat": v.is_polyrat,
            "factors": [
                {"lam": format_rational(f.lam), "ell": f.ell, "k": f.k} for f in v.certificate.factors
            ]
            if v.is_polyrat
            else None,
            "witness": v.witness.to_text() if v.witness is not None else None,
            "max_ell": v.max_ell,
        }
    return doc


def _loop_text(c: ChainedLoop) -> str:
    parts = []
    for i, q in enumerate(c.path_states):
        loop = c.loops[i]
        parts.append(f"{q}" if loop is None else f"{q}[{format_rational(loop.lam)}, {loop.ell}]")
    return " -> ".join(parts)


def chained_loops_text(loops: Sequence[ChainedLoop]) -> str:
    lines = [f"{len(loops)} chained loops"]
    for i, c in enumerate(loops, start=1):
        weights = " ".join(format_rational(w) for w in c.path_weights) or "-"
        lines.append(
            f"  #{i}: {_loop_text(c)}  weight {format_rational(c.initial_weight)}  edges {weights}"
            f"  series {chained_loop_series(c)}"
        )
    return "\n".join(lines)


def chained_loops_document(loops: Sequence[ChainedLoop]) -> list[dict]:
    return [
        {
            "path": list(c.path_states),
            "weights": [format_rational(w) for w in c.path_weights],
            "loops": [None if l is None else {"lam": format_rational(l.lam), "ell": l.ell} for l in c.loops],
            "initial_weight": format_rational(c.initial_weight),
            "series": chained_loop_series(c).to_text(),
        }
        for c in loops
    ]


def partial_fractions_text(terms: Sequence[PartialFractionTerm]) -> str:
    if not terms:
        return "0"
    parts = []
    for t in terms:
        if t.is_polynomial:
            parts.append(t.r.to_text())
        else:
            power = "" if t.k == 1 else f"^{t.k}"
            base = Polynomial.binomial(t.lam, t.ell).to_text()
            parts.append(f"({t.r.to_text()})/({base}){power}")
    return "\n".join(parts)


def partial_fractions_document(terms: Sequence[PartialFractionTerm]) -> list[dict]:
    return [
        {
            "num": [format_rational(c) for c in t.r.coeffs],
            "lam": format_rational(t.lam),
            "ell": t.ell,
            "k": t.k,
        }
        for t in terms
    ]


def error_text(error: PolyRatError) -> str:
    return f"error: {error}"
