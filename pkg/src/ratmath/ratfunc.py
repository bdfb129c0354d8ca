import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from src.errors import DomainError
from src.ratmath.polynomial import Polynomial, poly_gcd

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class RationalFunction:
    """P/Q with Q(0) = 1, read as the power series it expands to at 0.

    The constructor only normalizes Q(0) = 1; `reduced()` also cancels gcd(P, Q).
    Binomial-multiple extension deliberately builds unreduced presentations.
    """

    num: Polynomial
    den: Polynomial = Polynomial.one()

    def __post_init__(self):
        if self.den.is_zero():
            raise DomainError("denominator is the zero polynomial")
        q0 = self.den.coefficient(0)
        if q0 == 0:
            raise DomainError(f"denominator {self.den} vanishes at 0; no power series expansion")
        if q0 != 1:
            object.__setattr__(self, "num", self.num.scale(1 / q0))
            object.__setattr__(self, "den", self.den.scale(1 / q0))

    @classmethod
    def of(cls, num: Polynomial, den: Polynomial | None = None) -> "RationalFunction":
        """Reduced rational function."""
        return cls(num, den if den is not None else Polynomial.one()).reduced()

    @classmethod
    def polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial.one())

    def reduced(self) -> "RationalFunction":
        if self.num.is_zero():
            return RationalFunction(Polynomial.zero(), Polynomial.one())
        g = poly_gcd(self.num, self.den)
        if g.degree < 1:
            return self
        return RationalFunction(self.num // g, self.den // g)

    def is_reduced(self) -> bool:
        if self.num.is_zero():
            return self.den == Polynomial.one()
        return poly_gcd(self.num, self.den).degree < 1

    def same_series(self, other: "RationalFunction") -> bool:
        return self.num * other.den == other.num * self.den

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.of(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        """Cauchy product of the expansions."""
        return RationalFunction.of(self.num * other.num, self.den * other.den)

    def expand(self, n: int) -> list[Fraction]:
        return series_expand(self, n)

    def to_text(self) -> str:
        num = self.num.to_text()
        if self.den == Polynomial.one():
            return num
        if len([c for c in self.num.coeffs if c != 0]) > 1:
            num = f"({num})"
        return f"{num}/({self.den.to_text()})"

    def __str__(self) -> str:
        return self.to_text()


def series_expand(f: RationalFunction, n: int) -> list[Fraction]:
    """First n coefficients of P/Q, via the recurrence Q induces on them."""
    q = f.den.coeffs
    q0 = q[0]
    out: list[Fraction] = []
    for i in range(n):
        acc = f.num.coefficient(i)
        for j in range(1, min(i, len(q) - 1) + 1):
            acc -= q[j] * out[i - j]
        out.append(acc / q0)
    return out


def berlekamp_massey(terms: Sequence[Fraction]) -> RationalFunction:
    """Reduced P/Q of minimal denominator degree whose expansion starts with `terms`.

    A sequence satisfying a recurrence of order at most r is determined by 2r terms.
    """
    conn = Polynomial.one()  # current connection polynomial
    prev = Polynomial.one()
    length = 0
    shift = 1
    prev_disc = Fraction(1)
    for n, _ in enumerate(terms):
        disc = sum((conn.coefficient(i) * terms[n - i] for i in range(length + 1)), Fraction(0))
        if disc == 0:
            shift += 1
            continue
        update = conn - prev.shift(shift).scale(disc / prev_disc)
        if 2 * length <= n:
            prev, prev_disc = conn, disc
            length = n + 1 - length
            shift = 1
        else:
            shift += 1
        conn = update
    num = (Polynomial(tuple(terms)) * conn).truncate(length)
    logger.debug("berlekamp-massey: %d terms, linear complexity %d", len(terms), length)
    return RationalFunction.of(num, conn)
