import random
from fractions import Fraction

import pytest

from src.errors import DomainError
from src.ratmath.polynomial import Polynomial
from src.ratmath.ratfunc import RationalFunction, berlekamp_massey, series_expand
from tests.generators import polynomial, rational

FIB = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


def P(*coeffs) -> Polynomial:
    return Polynomial(tuple(Fraction(c) for c in coeffs))


def test_constructor_normalizes_constant_term():
    f = RationalFunction(P(2), P(2, -2))
    assert f.num == P(1)
    assert f.den == P(1, -1)


def test_denominator_must_not_vanish_at_zero():
    with pytest.raises(DomainError):
        RationalFunction(P(1), P(0, 1))
    with pytest.raises(DomainError):
        RationalFunction(P(1), Polynomial.zero())


def test_of_reduces():
    f = RationalFunction.of(P(1, 0, -1), P(1, -1))
    assert f.num == P(1, 1)
    assert f.den == P(1)
    assert f.is_reduced()


def test_constructor_keeps_common_factors():
    f = RationalFunction(P(1, 1), P(1, 0, -1))
    assert not f.is_reduced()
    assert f.same_series(RationalFunction.of(P(1), P(1, -1)))
    assert f.reduced() == RationalFunction(P(1), P(1, -1))


def test_series_expand_fibonacci():
    f = RationalFunction(P(0, 1), P(1, -1, -1))
    assert series_expand(f, 10) == FIB
    assert f.expand(0) == []


def test_sum_and_product():
    one_over = RationalFunction(P(1), P(1, -1))
    assert (one_over + one_over).expand(4) == [2, 2, 2, 2]
    # 1/(1-x)² has coefficients n + 1
    assert (one_over * one_over).expand(5) == [1, 2, 3, 4, 5]


def test_berlekamp_massey_recovers_fibonacci():
    assert berlekamp_massey([Fraction(v) for v in FIB]) == RationalFunction.of(P(0, 1), P(1, -1, -1))


@pytest.mark.parametrize(
    "terms, expected",
    [
        ([1, 1, 1, 1], RationalFunction(P(1), P(1, -1))),
        ([0, 0, 0], RationalFunction(Polynomial.zero(), P(1))),
        ([3, 0, 0, 0], RationalFunction(P(3), P(1))),
        ([1, 2, 4, 8, 16, 32], RationalFunction(P(1), P(1, -2))),
    ],
)
def test_berlekamp_massey(terms, expected):
    assert berlekamp_massey([Fraction(t) for t in terms]) == expected


def test_to_text():
    assert RationalFunction.of(P(0, 1), P(1, -1, -1)).to_text() == "x/(1 - x - x^2)"
    assert RationalFunction.of(P(2), P(1, 0, -3)).to_text() == "2/(1 - 3*x^2)"
    assert RationalFunction.of(P(1, 1), P(1, -2)).to_text() == "(1 + x)/(1 - 2*x)"
    assert str(RationalFunction.polynomial(P(0, 0, 5))) == "5*x^2"


def test_longer_expansions_extend_shorter_ones():
    rng = random.Random(31)
    for _ in range(50):
        den = Polynomial((Fraction(1),) + tuple(rational(rng) for _ in range(rng.randint(0, 4))))
        f = RationalFunction.of(polynomial(rng, rng.randint(0, 5)), den)
        n, k = rng.randint(0, 15), rng.randint(1, 10)
        assert series_expand(f, n + k)[:n] == series_expand(f, n)
