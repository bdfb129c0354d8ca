import logging
from dataclasses import dataclass
from fractions import Fraction

from src.errors import DomainError
from src.ratmath.binomial import BinomialCertificate, coprime_lift
from src.ratmath.polynomial import Polynomial, poly_gcd, poly_xgcd
from src.ratmath.ratfunc import RationalFunction

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class PartialFractionTerm:
    """R / (1 - λx^ℓ)^k. The polynomial part is the term with k = 0 (λ = 0, ℓ = 1)."""

    r: Polynomial
    lam: Fraction
    ell: int
    k: int

    @property
    def is_polynomial(self) -> bool:
        return self.k == 0

    def denominator(self) -> Polynomial:
        if self.is_polynomial:
            return Polynomial.one()
        return Polynomial.binomial(self.lam, self.ell) ** self.k

    def as_rational_function(self) -> RationalFunction:
        return RationalFunction(self.r, self.denominator())


def _pairwise_coprime(cert: BinomialCertificate) -> bool:
    bases = [f.base for f in cert.factors]
    return all(
        poly_gcd(bases[i], bases[j]).degree < 1
        for i in range(len(bases))
        for j in range(i + 1, len(bases))
    )


def partial_fractions(f: RationalFunction, cert: BinomialCertificate) -> list[PartialFractionTerm]:
    """Split f into a polynomial part plus Σ Rᵢ/(1 - λᵢx^ℓᵢ)^kᵢ with deg Rᵢ < ℓᵢkᵢ.

    `cert` must have residual 1 and its binomial product must be a multiple of f's
    denominator. Bases that are not coprime are lifted to common binomials first.
    """
    if not cert.complete:
        raise DomainError(f"certificate residual {cert.residual} is not 1")
    q = cert.binomial_product()
    if f.den != q:
        cofactor, rem = divmod(q, f.den)
        if not rem.is_zero():
            raise DomainError(f"{f.den} does not divide the certificate product {q}")
        f = RationalFunction(f.num * cofactor, q)
    if not _pairwise_coprime(cert):
        f, cert = coprime_lift(f, cert)
        q = f.den

    poly_part, p = divmod(f.num, q)
    terms: list[PartialFractionTerm] = []
    if not poly_part.is_zero():
        terms.append(PartialFractionTerm(poly_part, Fraction(0), 1, 0))
    for factor in cert.factors:
        d = factor.expand()
        e = q.exact_div(d)
        _, s, _ = poly_xgcd(e, d)
        r = (p * s) % d
        if not r.is_zero():
            terms.append(PartialFractionTerm(r, factor.lam, factor.ell, factor.k))
    logger.debug("partial fractions of %s: %d terms", f, len(terms))
    return terms


def recombine(terms: list[PartialFractionTerm]) -> RationalFunction:
    total = RationalFunction.polynomial(Polynomial.zero())
    for term in terms:
        total = total + term.as_rational_function()
    return total
