from fractions import Fraction

import pytest

from src.errors import StarUndefined
from src.seqexpr.evaluator import evaluate
from src.seqexpr.parser import parse


def terms(text: str, n: int) -> list[Fraction]:
    return evaluate(parse(text), n)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("geo(1,1)", [1, 1, 1]),
        ("arith(1, 2)", [1, 3, 5, 7]),
        ("geo(3, -2)", [3, -6, 12, -24]),
        ("fin[1, 2]", [1, 2, 0, 0]),
        ("arith(0,1) + geo(1,2)", [1, 3, 6, 11]),
        ("arith(0,1) * arith(0,1)", [0, 1, 4, 9, 16]),
        ("geo(1,1) . geo(1,1)", [1, 2, 3, 4]),
        ("shift(7, arith(0, 1))", [7, 0, 1, 2]),
        ("shuffle(geo(1,2), geo(1,1))", [1, 1, 2, 1, 4, 1, 8]),
        ("shuffle(arith(0,1), fin[9], geo(1,-1))", [0, 9, 1, 1, 0, -1, 2]),
    ],
)
def test_evaluate(text, expected):
    assert terms(text, len(expected)) == expected


def test_star_of_geometric_tail():
    # 1/(1 - x/(1-x)) = (1-x)/(1-2x): 1, 1, 2, 4, 8
    assert terms("star(shift(0, geo(1, 1)))", 5) == [1, 1, 2, 4, 8]


def test_star_needs_zero_constant_term():
    with pytest.raises(StarUndefined):
        terms("star(geo(1, 1))", 3)


def test_star_defined_even_for_one_term_when_child_starts_at_zero():
    assert terms("star(fin[0, 1])", 1) == [1]


def test_fibonacci_as_star():
    # x / (1 - x - x²) = x · star(x + x²)
    assert terms("fin[0, 1] . star(fin[0, 1, 1])", 8) == [0, 1, 1, 2, 3, 5, 8, 13]


def test_zero_and_negative_lengths():
    assert terms("geo(1, 2)", 0) == []
    with pytest.raises(ValueError):
        terms("geo(1, 2)", -1)


def test_exact_rationals():
    assert terms("geo(1, 1/2) + arith(1/3, 0)", 3) == [Fraction(4, 3), Fraction(5, 6), Fraction(7, 12)]
