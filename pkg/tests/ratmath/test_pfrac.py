import random
from fractions import Fraction

import pytest

from src.errors import DomainError
from src.ratmath.binomial import BinomialCertificate, BinomialFactor, binomial_factorize, binomial_multiple_extend
from src.ratmath.pfrac import PartialFractionTerm, partial_fractions, recombine
from src.ratmath.polynomial import Polynomial
from src.ratmath.ratfunc import RationalFunction
from tests.generators import coprime_certificate, polynomial


def P(*coeffs) -> Polynomial:
    return Polynomial(tuple(Fraction(c) for c in coeffs))


def test_two_simple_poles():
    # 1/((1 - x)(1 - 2x)) = -1/(1 - x) + 2/(1 - 2x)
    f = RationalFunction.of(P(1), P(1, -3, 2))
    terms = partial_fractions(f, binomial_factorize(f.den))
    assert terms == [
        PartialFractionTerm(P(-1), Fraction(1), 1, 1),
        PartialFractionTerm(P(2), Fraction(2), 1, 1),
    ]
    assert recombine(terms) == f


def test_polynomial_part():
    # (1 + x²)/(1 - x) = -1 - x + 2/(1 - x)
    f = RationalFunction(P(1, 0, 1), P(1, -1))
    terms = partial_fractions(f, binomial_factorize(f.den))
    assert terms[0] == PartialFractionTerm(P(-1, -1), Fraction(0), 1, 0)
    assert terms[0].is_polynomial
    assert terms[1] == PartialFractionTerm(P(2), Fraction(1), 1, 1)


def test_numerators_are_below_the_power_degree():
    cert = BinomialCertificate((BinomialFactor(Fraction(3), 2, 2), BinomialFactor(Fraction(1, 2), 1, 1)))
    f = RationalFunction(P(1, 2, 3, 4), cert.binomial_product())
    terms = partial_fractions(f, cert)
    for term in terms:
        assert term.r.degree < term.ell * term.k
    assert recombine(terms).same_series(f)


def test_denominator_dividing_the_certificate():
    f = RationalFunction.of(P(1), P(1, -1))
    cert = BinomialCertificate((BinomialFactor(Fraction(1), 1, 1), BinomialFactor(Fraction(2), 1, 1)))
    terms = partial_fractions(f, cert)
    assert terms == [PartialFractionTerm(P(1), Fraction(1), 1, 1)]


def test_non_coprime_certificate_is_lifted():
    cert = BinomialCertificate((BinomialFactor(Fraction(1), 1, 1), BinomialFactor(Fraction(1), 3, 1)))
    f = RationalFunction(P(1), cert.binomial_product())
    terms = partial_fractions(f, cert)
    assert all((t.lam, t.ell) == (Fraction(1), 3) for t in terms if not t.is_polynomial)
    assert recombine(terms).same_series(f)


def test_incomplete_certificate_is_rejected():
    f = RationalFunction.of(P(1), P(1, -1, -1))
    with pytest.raises(DomainError):
        partial_fractions(f, binomial_factorize(f.den))


def test_certificate_must_cover_the_denominator():
    f = RationalFunction.of(P(1), P(1, -3))
    cert = BinomialCertificate((BinomialFactor(Fraction(2), 1, 1),))
    with pytest.raises(DomainError):
        partial_fractions(f, cert)


def test_extended_presentation_splits():
    f = RationalFunction.of(P(1), P(1, -2, 2))
    extended, cert = binomial_multiple_extend(f)
    terms = partial_fractions(extended, cert)
    assert recombine(terms) == f


def test_random_products_recombine():
    rng = random.Random(5)
    for _ in range(100):
        cert = coprime_certificate(rng)
        q = cert.binomial_product()
        num = polynomial(rng, rng.randint(0, q.degree + 1))
        f = RationalFunction(num, q)
        terms = partial_fractions(f, cert)
        assert recombine(terms).same_series(f)
        assert all(t.r.degree < t.ell * t.k for t in terms if not t.is_polynomial)
