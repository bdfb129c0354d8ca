"""Reading and writing representations: text in, domain objects out, and back."""

import json
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from src.cra.machine import Cra
from src.cra.regexpr import parse_register_expr, to_text as register_text
from src.errors import FormatError, InputError
from src.formats.schemas import AutomatonFile, MachineFile, RecurrenceFile, SeriesFile
from src.lrs.recurrence import Lrs
from src.models.representation import Kind, Representation
from src.ratmath.polynomial import Polynomial
from src.ratmath.ratfunc import RationalFunction
from src.seqexpr.parser import parse, to_text
from src.wa.automaton import WeightedAutomaton

logger = logging.getLogger(__name__)


def read_input(arg: str) -> tuple[str, str | None]:
    """(text, source): an existing file, "-" for standard input, or the argument itself."""
    if arg == "-":
        return sys.stdin.read(), "-"
    path = Path(arg)
    try:
        is_file = path.is_file()
    except OSError:  # e.g. an expression longer than a file name may be
        is_file = False
    if not is_file:
        return arg, None
    try:
        return path.read_text(encoding="utf-8"), str(path)
    except OSError as e:
        raise InputError(f"cannot read {arg}: {e}") from None


def _validate(model, text: str):
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"]) or "document"
        raise FormatError(f"{model.__name__}: {where}: {first['msg']}") from None


# -- file models <-> domain ------------------------------------------------


def automaton_from_file(doc: AutomatonFile) -> WeightedAutomaton:
    return WeightedAutomaton.build(doc.states, doc.transitions, doc.initial, doc.final)


def automaton_to_file(a: WeightedAutomaton) -> AutomatonFile:
    return AutomatonFile(
        states=a.n_states,
        initial=[(q, w) for q, w in enumerate(a.initial) if w != 0],
        final=[(q, w) for q, w in enumerate(a.final) if w != 0],
        transitions=[(p, q, w) for p, q, w in a.edges()],
    )


def machine_from_file(doc: MachineFile) -> Cra:
    delta = tuple(
        (nxt, {x: parse_register_expr(text) for x, text in updates.items()}) for nxt, updates in doc.delta
    )
    mu = {q: parse_register_expr(text) for q, text in doc.mu.items()}
    return Cra(
        registers=tuple(doc.registers),
        n_states=doc.states,
        delta=delta,
        initial_state=doc.initial_state,
        nu0=dict(doc.nu0),
        mu=mu,
    )


def machine_to_file(c: Cra) -> MachineFile:
    return MachineFile(
        registers=list(c.registers),
        states=c.n_states,
        initial_state=c.initial_state,
        nu0={x: v for x, v in c.nu0.items()},
        delta=[(nxt, {x: register_text(e) for x, e in updates.items()}) for nxt, updates in c.delta],
        mu={q: register_text(e) for q, e in sorted(c.mu.items())},
    )


def recurrence_from_file(doc: RecurrenceFile) -> Lrs:
    return Lrs(tuple(doc.coeffs), tuple(doc.init))


def recurrence_to_file(l: Lrs) -> RecurrenceFile:
    return RecurrenceFile(coeffs=list(l.coeffs), init=list(l.init))


def series_from_file(doc: SeriesFile) -> RationalFunction:
    return RationalFunction.of(Polynomial(tuple(doc.num)), Polynomial(tuple(doc.den)))


def series_to_file(f: RationalFunction) -> SeriesFile:
    return SeriesFile(num=list(f.num.coeffs), den=list(f.den.coeffs))


_FILES = {
    Kind.WA: (AutomatonFile, automaton_from_file, automaton_to_file),
    Kind.CCRA: (MachineFile, machine_from_file, machine_to_file),
    Kind.LRS: (RecurrenceFile, recurrence_from_file, recurrence_to_file),
    Kind.SERIES: (SeriesFile, series_from_file, series_to_file),
}


# -- text <-> Representation ------------------------------------------------


def parse_representation(text: str, kind: Kind, source: str | None = None) -> Representation:
    if kind is Kind.EXPR:
        return Representation.expr(parse(text.strip()), source)
    model, from_file, _ = _FILES[kind]
    value = from_file(_validate(model, text))
    logger.debug("read %s from %s", kind.value, source or "argument")
    return Representation(kind, value, source)


def load(arg: str, kind: Kind) -> Representation:
    text, source = read_input(arg)
    return parse_representation(text, kind, source)


def to_document(rep: Representation) -> dict | str:
    """JSON-ready form: a string for expressions, the file document otherwise."""
    if rep.kind is Kind.EXPR:
        return to_text(rep.value)
    _, _, to_file = _FILES[rep.kind]
    return to_file(rep.value).model_dump(mode="json")


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)
