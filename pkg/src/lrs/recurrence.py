from dataclasses import dataclass
from fractions import Fraction

from src.errors import FormatError
from src.ratmath.polynomial import Polynomial
from src.ratmath.ratfunc import RationalFunction
from src.wa.automaton import WeightedAutomaton


@dataclass(frozen=True, slots=True)
class Lrs:
    """u_{n+k} = a₁u_{n+k-1} + ... + a_k·u_n with u₀ ... u_{k-1} given; k = 0 is the zero sequence."""

    coeffs: tuple[Fraction, ...]
    init: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(self.init):
            raise FormatError(f"{len(self.coeffs)} coefficients but {len(self.init)} initial values")

    @property
    def order(self) -> int:
        return len(self.coeffs)


def lrs_values(lrs: Lrs, n: int) -> list[Fraction]:
    k = lrs.order
    if k == 0:
        return [Fraction(0)] * n
    out = list(lrs.init[:n])
    while len(out) < n:
        out.append(sum((a * out[-i] for i, a in enumerate(lrs.coeffs, start=1)), Fraction(0)))
    return out


def eval_lrs(lrs: Lrs, n: int) -> Fraction:
    return lrs_values(lrs, n + 1)[n]


def char_poly(lrs: Lrs) -> Polynomial:
    """x^k - a₁x^(k-1) - ... - a_k"""
    return Polynomial(tuple(-a for a in reversed(lrs.coeffs)) + (Fraction(1),))


def reversed_char_poly(lrs: Lrs) -> Polynomial:
    """1 - a₁x - ... - a_k·x^k"""
    return Polynomial((Fraction(1),) + tuple(-a for a in lrs.coeffs))


def lrs_to_series(lrs: Lrs) -> RationalFunction:
    q = reversed_char_poly(lrs)
    prefix = Polynomial(lrs.init)
    return RationalFunction.of((prefix * q).truncate(lrs.order), q)


def series_to_lrs(f: RationalFunction) -> Lrs:
    """Recurrence read off the denominator, padded so the numerator fits below the order."""
    k = max(f.den.degree, f.num.degree + 1)
    coeffs = tuple(-f.den.coefficient(i) for i in range(1, k + 1))
    return Lrs(coeffs, tuple(f.expand(k)))


def lrs_to_wa(lrs: Lrs) -> WeightedAutomaton:
    """Companion automaton: I = e₀, M shifts the window (u_n ... u_{n+k-1}), F = initial values."""
    k = lrs.order
    if k == 0:
        return WeightedAutomaton.empty()
    transitions = [(i, i + 1, 1) for i in range(k - 1)]
    transitions += [(k - 1, j, lrs.coeffs[k - 1 - j]) for j in range(k)]
    return WeightedAutomaton.build(k, transitions, [(0, 1)], list(enumerate(lrs.init)))
