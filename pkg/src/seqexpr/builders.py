from fractions import Fraction
from typing import Iterable

from src.errors import DomainError
from src.ratmath.polynomial import Polynomial
from src.seqexpr.ast import Arith, Fin, Geo, Hadamard, SeqExpr, Shift, Shuffle, Sum


def zero() -> SeqExpr:
    return Geo(Fraction(0), Fraction(1))


def constant(c) -> SeqExpr:
    return Geo(Fraction(c), Fraction(1))


def stretch(e: SeqExpr, k: int) -> SeqExpr:
    """Insert k - 1 zeros after every term."""
    if k < 1:
        raise DomainError(f"stretch factor must be positive, got {k}")
    if k == 1:
        return e
    return Shuffle((e,) + tuple(zero() for _ in range(k - 1)))


def shift_by(e: SeqExpr, m: int, fill=0) -> SeqExpr:
    for _ in range(m):
        e = Shift(Fraction(fill), e)
    return e


def sum_all(exprs: Iterable[SeqExpr]) -> SeqExpr:
    total: SeqExpr | None = None
    for e in exprs:
        total = e if total is None else Sum(total, e)
    return zero() if total is None else total


def polynomial_expr(p: Polynomial) -> SeqExpr:
    if p.is_zero():
        return zero()
    return Fin(tuple(p.coeffs))


def binomial_term_expr(r: Polynomial, lam, ell: int, k: int) -> SeqExpr:
    """Expression for the expansion of R / (1 - λx^ℓ)^k.

    Term ℓn of 1/(1 - λx^ℓ)^k is C(n+k-1, k-1)·λⁿ and C(n+k-1, k-1) = Π_{j<k} (1 + n/j),
    a Hadamard product of arithmetic progressions.
    """
    lam = Fraction(lam)
    if lam == 0:
        raise DomainError("binomial base needs λ != 0")
    if ell < 1 or k < 1:
        raise DomainError(f"need ℓ >= 1 and k >= 1, got ℓ={ell}, k={k}")
    count: SeqExpr | None = None
    for j in range(1, k):
        factor = Arith(Fraction(1), Fraction(1, j))
        count = factor if count is None else Hadamard(count, factor)

    terms = []
    for i, coefficient in enumerate(r.coeffs):
        if coefficient == 0:
            continue
        base: SeqExpr = Geo(coefficient, lam)
        if count is not None:
            base = Hadamard(count, base)
        terms.append(shift_by(stretch(base, ell), i))
    return sum_all(terms)
