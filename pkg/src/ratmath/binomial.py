"""Binomial factors (1 - λx^ℓ)^k of generating-function denominators.

A rational function is poly-rational exactly when its denominator divides a product
of such binomials. Stripping them off, and extending a leftover factor up to a binomial
it divides, are the two constructive steps behind that test.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from src.errors import DomainError, NotPolyRational
from src.ratmath.polynomial import (
    Polynomial,
    poly_gcd,
    poly_gcd_all,
    product,
    rational_roots,
    resultant_in_constant,
    root_order_key,
    square_free_decomposition,
)
from src.ratmath.ratfunc import RationalFunction

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BinomialFactor:
    lam: Fraction
    ell: int
    k: int = 1

    @property
    def base(self) -> Polynomial:
        return Polynomial.binomial(self.lam, self.ell)

    def expand(self) -> Polynomial:
        return self.base**self.k

    def key(self) -> tuple[Fraction, int]:
        return self.lam, self.ell


@dataclass(frozen=True, slots=True)
class BinomialCertificate:
    """q = residual · Π (1 - λᵢx^ℓᵢ)^kᵢ"""

    factors: tuple[BinomialFactor, ...] = ()
    residual: Polynomial = field(default_factory=Polynomial.one)

    @property
    def complete(self) -> bool:
        return self.residual == Polynomial.one()

    def binomial_product(self) -> Polynomial:
        return product([f.expand() for f in self.factors])

    def expand(self) -> Polynomial:
        return self.residual * self.binomial_product()


def default_max_ell(degree: int) -> int:
    return max(1, 2 * degree * degree)


def merge_factors(factors) -> tuple[BinomialFactor, ...]:
    """Merge entries with equal (λ, ℓ), keeping first-seen order."""
    merged: dict[tuple[Fraction, int], int] = {}
    for f in factors:
        merged[f.key()] = merged.get(f.key(), 0) + f.k
    return tuple(BinomialFactor(lam, ell, k) for (lam, ell), k in merged.items())


def binomial_factorize(q: Polynomial, max_ell: int | None = None) -> BinomialCertificate:
    """Greedily strip factors (1 - λx^ℓ) from q, ℓ ascending.

    (1 - λx^ℓ) divides q iff 1/λ is a common root of the residue-class polynomials
    q_r(μ) in q(x) = Σ_r x^r q_r(x^ℓ).
    """
    if q.coefficient(0) == 0:
        raise DomainError(f"{q} vanishes at 0")
    if max_ell is None:
        max_ell = default_max_ell(q.degree)
    residual = q
    stripped: list[BinomialFactor] = []
    ell = 1
    while ell <= min(residual.degree, max_ell):
        classes = [residual.residue_class(r, ell) for r in range(ell)]
        g = poly_gcd_all(classes)
        if g.degree >= 1:
            for mu in rational_roots(g):
                if mu == 0:
                    continue
                lam = 1 / mu
                base = Polynomial.binomial(lam, ell)
                while residual.degree >= ell:
                    quot, rem = divmod(residual, base)
                    if not rem.is_zero():
                        break
                    residual = quot
                    stripped.append(BinomialFactor(lam, ell, 1))
                    logger.debug("stripped 1 - (%s)x^%d", lam, ell)
        ell += 1
    return BinomialCertificate(merge_factors(stripped), residual)


def _stuck(witness: Polynomial, max_ell: int) -> NotPolyRational:
    logger.debug("no binomial multiple of %s up to exponent %d", witness, max_ell)
    return NotPolyRational(witness, max_ell)


def _binomial_multiple(s: Polynomial, max_ell: int) -> list[tuple[Polynomial, BinomialFactor]]:
    """Split square-free s (s(0) = 1) into pieces, each dividing some 1 - λx^ℓ.

    Returns (piece, binomial) pairs; raises NotPolyRational on a piece with no such ℓ.
    """
    for ell in range(1, max_ell + 1):
        r = Polynomial.monomial(1, ell) % s
        if r.is_constant() and not r.is_zero():
            c = r.coefficient(0)
            return [(s, BinomialFactor(1 / c, ell))]
    for ell in range(1, max_ell + 1):
        xl = Polynomial.monomial(1, ell)
        for c in rational_roots(resultant_in_constant(s, ell)):
            if c == 0:
                continue
            g = poly_gcd(s, xl - c)
            if 1 <= g.degree < s.degree:
                g = g.unit_constant()
                rest = s.exact_div(g).unit_constant()
                logger.debug("split %s at x^%d = %s into %s and %s", s, ell, c, g, rest)
                return _binomial_multiple(g, max_ell) + _binomial_multiple(rest, max_ell)
    raise _stuck(s, max_ell)


def binomial_multiple_extend(
    f: RationalFunction, max_ell: int | None = None
) -> tuple[RationalFunction, BinomialCertificate]:
    """Rewrite f over a denominator that is exactly a product of binomial powers.

    The returned presentation is series-equal to f and generally not reduced.
    Raises NotPolyRational when some factor of the reduced denominator divides no
    binomial 1 - λx^ℓ with ℓ <= max_ell.
    """
    f = f.reduced()
    if max_ell is None:
        max_ell = default_max_ell(f.den.degree)
    cert = binomial_factorize(f.den, max_ell)
    if cert.complete:
        return f, cert
    num = f.num
    factors = list(cert.factors)
    for piece, mult in square_free_decomposition(cert.residual):
        piece = piece.unit_constant()
        for part, binomial in _binomial_multiple(piece, max_ell):
            cofactor = binomial.base.exact_div(part)
            num = num * cofactor**mult
            factors.append(BinomialFactor(binomial.lam, binomial.ell, mult))
    extended = BinomialCertificate(merge_factors(factors), Polynomial.one())
    den = extended.binomial_product()
    result = RationalFunction(num, den)
    # residual(0) = 1 and every piece is normalized, so the scaling is exact
    if not result.same_series(f):
        raise DomainError("binomial extension changed the series")
    return result, extended


def coprime_lift(
    f: RationalFunction, cert: BinomialCertificate
) -> tuple[RationalFunction, BinomialCertificate]:
    """Make the certificate's bases pairwise coprime while keeping them binomials.

    Two bases sharing a root α both divide 1 - Λx^L with L = lcm(ℓ₁, ℓ₂) and
    Λ = λ₁^(L/ℓ₁) = λ₂^(L/ℓ₂); they are replaced by that base with exponent k₁ + k₂.
    """
    if not cert.complete:
        raise DomainError("certificate has a non-binomial residual")
    num = f.num
    factors = list(cert.factors)
    while True:
        pair = _shared_pair(factors)
        if pair is None:
            break
        i, j = pair
        a, b = factors[i], factors[j]
        ell = lcm(a.ell, b.ell)
        lam = a.lam ** (ell // a.ell)
        if lam != b.lam ** (ell // b.ell):
            raise DomainError(f"bases {a.base} and {b.base} share a factor but no binomial multiple")
        lifted = Polynomial.binomial(lam, ell)
        num = num * (lifted.exact_div(a.base) ** a.k) * (lifted.exact_div(b.base) ** b.k)
        rest = [f for n, f in enumerate(factors) if n not in (i, j)]
        factors = list(merge_factors(rest + [BinomialFactor(lam, ell, a.k + b.k)]))
        logger.debug("lifted %s and %s to %s", a.base, b.base, lifted)
    lifted_cert = BinomialCertificate(tuple(factors), Polynomial.one())
    return RationalFunction(num, lifted_cert.binomial_product()), lifted_cert


def _shared_pair(factors: list[BinomialFactor]) -> tuple[int, int] | None:
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if poly_gcd(factors[i].base, factors[j].base).degree >= 1:
                return i, j
    return None


def sort_factors(factors) -> tuple[BinomialFactor, ...]:
    return tuple(sorted(factors, key=lambda f: (f.ell, root_order_key(f.lam), f.k)))
