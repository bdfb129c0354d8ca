"""Cross-checks against sympy as an independent computer algebra system."""

import random
from fractions import Fraction

import pytest

from src.ratmath.pfrac import partial_fractions
from src.ratmath.polynomial import Polynomial, poly_gcd, rational_roots
from src.ratmath.ratfunc import RationalFunction
from tests.generators import coprime_certificate, polynomial

sympy = pytest.importorskip("sympy")
x = sympy.Symbol("x")


def to_sympy(p: Polynomial):
    return sum((sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coeffs)), sympy.Integer(0))


def from_sympy(expr) -> Polynomial:
    coeffs = sympy.Poly(expr, x).all_coeffs()[::-1]
    return Polynomial(tuple(Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in coeffs))


def test_gcd_matches_sympy():
    rng = random.Random(11)
    for _ in range(30):
        common = polynomial(rng, rng.randint(0, 2))
        a = polynomial(rng, rng.randint(0, 3)) * common
        b = polynomial(rng, rng.randint(0, 3)) * common
        if a.is_zero() or b.is_zero():
            continue
        expected = sympy.Poly(sympy.gcd(to_sympy(a), to_sympy(b)), x).monic()
        assert poly_gcd(a, b) == from_sympy(expected.as_expr())


def test_rational_roots_match_sympy():
    rng = random.Random(12)
    for _ in range(30):
        roots = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, 3))]
        p = Polynomial.one()
        for r in roots:
            p = p * Polynomial((-r, 1))
        p = p * Polynomial((1, 0, 1))  # no rational roots
        expected = {Fraction(int(sympy.fraction(r)[0]), int(sympy.fraction(r)[1])) for r in sympy.Poly(to_sympy(p), x).ground_roots()}
        assert set(rational_roots(p)) == expected


def test_partial_fractions_sum_matches_sympy():
    rng = random.Random(13)
    for _ in range(15):
        cert = coprime_certificate(rng, max_degree=6)
        q = cert.binomial_product()
        f = RationalFunction(polynomial(rng, q.degree - 1), q)
        total = sum(
            (to_sympy(t.r) / to_sympy(t.denominator()) for t in partial_fractions(f, cert)),
            sympy.Integer(0),
        )
        assert sympy.simplify(total - to_sympy(f.num) / to_sympy(f.den)) == 0
