"""Dense univariate polynomials over the rationals.

A polynomial is a tuple of coefficients, index i holding the coefficient of x^i,
with trailing zeros stripped (the zero polynomial is the empty tuple).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from src.errors import DomainError
from src.ratmath.matrix import charpoly
from src.ratmath.rational import format_rational


def _normalize(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Polynomial:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c, degree: int) -> "Polynomial":
        return cls((0,) * degree + (c,))

    @classmethod
    def binomial(cls, lam, ell: int) -> "Polynomial":
        """1 - λx^ℓ"""
        return cls((1,) + (0,) * (ell - 1) + (-Fraction(lam),))

    # -- queries -----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (-1 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    def __call__(self, value) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise DomainError("negative polynomial power")
        result = Polynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        return Polynomial(tuple(a * c for a in self.coeffs))

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        if len(rem) - 1 < dq:
            return Polynomial.zero(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            quot[i - dq] = c
            if c == 0:
                continue
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise DomainError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero()

    # -- transforms --------------------------------------------------------

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def unit_constant(self) -> "Polynomial":
        """Scale so the constant coefficient is 1 (requires p(0) != 0)."""
        if self.coefficient(0) == 0:
            raise DomainError(f"{self} vanishes at 0")
        return self.scale(1 / self.coeffs[0])

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def truncate(self, n: int) -> "Polynomial":
        """Keep the coefficients of x^0 .. x^(n-1)."""
        return Polynomial(self.coeffs[:n])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Polynomial((0,) * k + self.coeffs)

    def substitute_power(self, ell: int) -> "Polynomial":
        """p(x^ℓ)"""
        if self.is_zero():
            return self
        out = [Fraction(0)] * (self.degree * ell + 1)
        for i, c in enumerate(self.coeffs):
            out[i * ell] = c
        return Polynomial(out)

    def residue_class(self, r: int, ell: int) -> "Polynomial":
        """q_r(μ) where p(x) = Σ_r x^r q_r(x^ℓ)."""
        return Polynomial(self.coeffs[r::ell])

    def primitive_integer_coeffs(self) -> list[int]:
        """Integer coefficients with gcd 1 and positive leading coefficient, proportional to p."""
        if self.is_zero():
            return []
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        content = reduce(gcd, ints)
        if ints[-1] < 0:
            content = -content
        return [v // content for v in ints]

    # -- text --------------------------------------------------------------

    def to_text(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if mag == 1 else f"{format_rational(mag)}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()})"


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return NotImplemented


# -- Euclidean toolkit -----------------------------------------------------


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(g, s, t) with s·a + t·b = g and g monic."""
    r0, r1 = a, b
    s0, s1 = Polynomial.one(), Polynomial.zero()
    t0, t1 = Polynomial.zero(), Polynomial.one()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.leading
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_gcd_all(polys: Iterable[Polynomial]) -> Polynomial:
    return reduce(poly_gcd, polys, Polynomial.zero())


def square_free_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: p = c · Π S_j^j with S_j monic, square-free and pairwise coprime.

    Returns the non-constant (S_j, j) pairs in increasing j; the constant c is dropped.
    """
    if p.degree < 1:
        return []
    out: list[tuple[Polynomial, int]] = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    j = 1
    while b.degree > 0:
        s = poly_gcd(b, d)
        b = b // s
        c = d // s
        d = c - b.derivative()
        if s.degree > 0:
            out.append((s.monic(), j))
        j += 1
    return out


def _trial_factor(n: int) -> dict[int, int]:
    n = abs(n)
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _divisors(n: int) -> list[int]:
    divs = [1]
    for prime, exp in _trial_factor(n).items():
        divs = [d * prime**e for d in divs for e in range(exp + 1)]
    return sorted(divs)


def rational_roots(p: Polynomial) -> list[Fraction]:
    """Distinct rational roots, sorted by (|num| + den, sign) with positive first.

    Rational-root theorem over the primitive integer form; factors by trial division.
    """
    if p.is_zero():
        raise DomainError("the zero polynomial has every number as a root")
    roots: list[Fraction] = []
    v = p.valuation()
    if v > 0:
        roots.append(Fraction(0))
        p = Polynomial(p.coeffs[v:])
    if p.degree >= 1:
        ints = p.primitive_integer_coeffs()
        for q in _divisors(ints[-1]):
            for num in _divisors(ints[0]):
                for sign in (1, -1):
                    cand = Fraction(sign * num, q)
                    if cand not in roots and p(cand) == 0:
                        roots.append(cand)
    return sorted(roots, key=root_order_key)


def root_order_key(value: Fraction) -> tuple[int, int]:
    return abs(value.numerator) + value.denominator, 0 if value >= 0 else 1


def resultant_in_constant(s: Polynomial, ell: int) -> Polynomial:
    """Polynomial in c whose roots are α^ℓ over the roots α of s (with multiplicity).

    It is the characteristic polynomial of multiplication by x^ℓ in ℚ[x]/(s), i.e.
    Res_x(s, x^ℓ - c) up to a nonzero constant factor.
    """
    if s.degree < 1:
        return Polynomial.one()
    d = s.degree
    r = Polynomial.monomial(1, ell) % s
    columns = []
    basis = Polynomial.one()
    for _ in range(d):
        image = (r * basis) % s
        columns.append([image.coefficient(i) for i in range(d)])
        basis = basis.shift(1)
    matrix = [[columns[j][i] for j in range(d)] for i in range(d)]
    return Polynomial(charpoly(matrix))


def product(polys: Sequence[Polynomial]) -> Polynomial:
    return reduce(lambda a, b: a * b, polys, Polynomial.one())
