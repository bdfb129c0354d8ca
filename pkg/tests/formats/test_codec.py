import json
from fractions import Fraction

import pytest

from src.cra.regexpr import Add, Var
from src.errors import FormatError, ParseError
from src.formats.codec import dumps, load, parse_representation, read_input, to_document
from src.models.representation import Kind, Representation
from src.ratmath.polynomial import Polynomial
from src.ratmath.ratfunc import RationalFunction
from src.samples import fibonacci_machine, fibonacci_recurrence
from src.seqexpr.ast import Arith
from src.wa.witnesses import chained_loop_a3


def test_expression_text():
    rep = parse_representation("  arith(0, 1/2)\n", Kind.EXPR)
    assert rep.value == Arith(Fraction(0), Fraction(1, 2))
    assert to_document(rep) == "arith(0, 1/2)"


def test_automaton_document():
    text = '{"states": 2, "initial": [[0, "2"]], "final": [[0, 1]], "transitions": [[0, 1, "1"], [1, 0, "3"]]}'
    rep = parse_representation(text, Kind.WA)
    assert rep.terms(5) == [2, 0, 6, 0, 18]
    assert to_document(rep) == {
        "states": 2,
        "initial": [[0, "2"]],
        "final": [[0, "1"]],
        "transitions": [[0, 1, "1"], [1, 0, "3"]],
    }


def test_documents_read_back():
    for rep in [
        Representation.wa(chained_loop_a3()),
        Representation.ccra(fibonacci_machine()),
        Representation.lrs(fibonacci_recurrence()),
        Representation.series(RationalFunction.of(Polynomial((0, 1)), Polynomial((1, -1, -1)))),
    ]:
        back = parse_representation(dumps(to_document(rep)), rep.kind)
        assert back.terms(12) == rep.terms(12)


def test_machine_document():
    doc = to_document(Representation.ccra(fibonacci_machine()))
    assert doc["delta"] == [[0, {"x0": "x1", "x1": "x0 + x1"}]]
    assert doc["nu0"] == {"x0": "0", "x1": "1"}
    c = parse_representation(json.dumps(doc), Kind.CCRA).value
    assert c.delta[0][1]["x1"] == Add(Var("x0"), Var("x1"))


def test_series_document_defaults_to_polynomial():
    rep = parse_representation('{"num": ["1", "-1/2"]}', Kind.SERIES)
    assert rep.value == RationalFunction.polynomial(Polynomial((1, Fraction(-1, 2))))


@pytest.mark.parametrize(
    "kind, text",
    [
        (Kind.WA, "{not json"),
        (Kind.WA, '{"states": 1, "transitions": [[0, 1, "1"]]}'),
        (Kind.WA, '{"states": 1, "colour": "red"}'),
        (Kind.LRS, '{"coeffs": ["1", "1"], "init": [0.5, "1"]}'),
        (Kind.LRS, '{"coeffs": ["1"], "init": ["1/0"]}'),
        (Kind.LRS, '{"coeffs": ["1", "1"], "init": ["0"]}'),
        (Kind.CCRA, '{"registers": ["x"], "states": 1, "delta": [[0, {"y": "x"}]]}'),
    ],
)
def test_malformed_documents(kind, text):
    with pytest.raises(FormatError):
        parse_representation(text, kind)


def test_bad_register_expression():
    with pytest.raises(ParseError):
        parse_representation('{"registers": ["x"], "states": 1, "delta": [[0, {"x": "x +"}]]}', Kind.CCRA)


def test_read_input(tmp_path):
    path = tmp_path / "fib.json"
    path.write_text('{"coeffs": ["1", "1"], "init": ["0", "1"]}', encoding="utf-8")
    assert read_input(str(path)) == (path.read_text(encoding="utf-8"), str(path))
    assert read_input("geo(1, 2)") == ("geo(1, 2)", None)
    rep = load(str(path), Kind.LRS)
    assert rep.source == str(path)
    assert rep.label == f"lrs ({path})"
    assert rep.value == fibonacci_recurrence()


def test_missing_file_is_read_as_text(tmp_path):
    with pytest.raises(FormatError):
        load(str(tmp_path / "missing.json"), Kind.LRS)
