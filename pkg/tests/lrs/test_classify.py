from fractions import Fraction

import pytest

from src.errors import NotPolyRational
from src.lrs.classify import classify_polyrat, classify_series, lrs_to_expr, series_to_expr
from src.lrs.recurrence import Lrs, lrs_values, reversed_char_poly
from src.ratmath.polynomial import Polynomial
from src.ratmath.ratfunc import RationalFunction
from src.samples import fibonacci_recurrence
from src.seqexpr.evaluator import evaluate
from src.seqexpr.fragments import POLY_RAT, in_fragment


def P(*coeffs) -> Polynomial:
    return Polynomial(coeffs)


def lrs(coeffs, init) -> Lrs:
    return Lrs(tuple(map(Fraction, coeffs)), tuple(map(Fraction, init)))


def test_fibonacci_is_not_poly_rational():
    verdict = classify_polyrat(fibonacci_recurrence())
    assert not verdict.is_polyrat
    assert verdict.witness == P(1, -1, -1)
    assert verdict.max_ell == 8
    assert verdict.series == RationalFunction.of(P(0, 1), P(1, -1, -1))
    with pytest.raises(NotPolyRational):
        lrs_to_expr(fibonacci_recurrence())


@pytest.mark.parametrize(
    "coeffs, init",
    [
        ([2, -1], [0, 1]),  # n
        ([0, -1], [1, 0]),  # 1, 0, -1, 0, ...
        ([2, -2], [1, 0]),  # denominator divides 1 + 4x^4
        ([3, -3, 1], [0, 1, 4]),  # n^2
        ([0, 0, 2], [1, 2, 3]),  # 1 - 2x^3
    ],
)
def test_poly_rational_recurrences(coeffs, init):
    l = lrs(coeffs, init)
    verdict = classify_polyrat(l)
    assert verdict.is_polyrat
    assert verdict.certificate.complete
    assert verdict.extended.same_series(verdict.series)
    e = lrs_to_expr(l)
    assert in_fragment(e, POLY_RAT)
    assert evaluate(e, 40) == lrs_values(l, 40)


def test_exponent_bound_limits_the_answer():
    verdict = classify_polyrat(lrs([2, -2], [1, 0]), max_ell=3)
    assert not verdict.is_polyrat
    assert verdict.max_ell == 3
    assert classify_polyrat(lrs([2, -2], [1, 0]), max_ell=4).is_polyrat


def test_series_to_expr_handles_polynomial_parts():
    f = RationalFunction.of(P(1, 2, 0, 0, 5), P(1, -3))
    assert classify_series(f).is_polyrat
    assert evaluate(series_to_expr(f), 25) == f.expand(25)
    assert evaluate(series_to_expr(RationalFunction.polynomial(P(4, 0, -1))), 5) == [4, 0, -1, 0, 0]


def padded(rec: Lrs, mu) -> Lrs:
    """The same sequence, with the recurrence multiplied by (1 - mu·x)."""
    q = reversed_char_poly(rec) * Polynomial((Fraction(1), -Fraction(mu)))
    k = rec.order + 1
    return Lrs(tuple(-q.coefficient(i) for i in range(1, k + 1)), tuple(lrs_values(rec, k)))


@pytest.mark.parametrize("mu", [0, 2, -1, Fraction(1, 3)])
@pytest.mark.parametrize(
    "coeffs, init",
    [([1, 1], [0, 1]), ([2, -1], [0, 1]), ([2, -2], [1, 0]), ([3, -3, 1], [0, 1, 4]), ([0, 0, 2], [1, 2, 3])],
)
def test_padded_recurrences_get_the_same_verdict(coeffs, init, mu):
    rec = lrs(coeffs, init)
    longer = padded(rec, mu)
    assert longer.order == rec.order + 1
    assert lrs_values(longer, 30) == lrs_values(rec, 30)
    assert classify_polyrat(longer) == classify_polyrat(rec)
