"""Register expressions e ::= x | r | e + e | e · e, and their expanded polynomial form."""

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from src.errors import ParseError
from src.ratmath.rational import format_rational


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Const:
    value: Fraction


@dataclass(frozen=True, slots=True)
class Add:
    left: "RegisterExpr"
    right: "RegisterExpr"


@dataclass(frozen=True, slots=True)
class Mul:
    left: "RegisterExpr"
    right: "RegisterExpr"


RegisterExpr = Union[Var, Const, Add, Mul]


def occurrences(e: RegisterExpr) -> Counter:
    """How many times each register is read in e."""
    match e:
        case Var(name):
            return Counter({name: 1})
        case Const():
            return Counter()
        case Add(l, r) | Mul(l, r):
            return occurrences(l) + occurrences(r)
    raise TypeError(f"not a register expression: {e!r}")


def variables(e: RegisterExpr) -> set[str]:
    return set(occurrences(e))


def evaluate(e: RegisterExpr, valuation: Mapping[str, Fraction]) -> Fraction:
    match e:
        case Var(name):
            return valuation.get(name, Fraction(0))
        case Const(value):
            return value
        case Add(l, r):
            return evaluate(l, valuation) + evaluate(r, valuation)
        case Mul(l, r):
            return evaluate(l, valuation) * evaluate(r, valuation)
    raise TypeError(f"not a register expression: {e!r}")


def substitute(e: RegisterExpr, images: Mapping[str, RegisterExpr]) -> RegisterExpr:
    """Replace every register x by images[x]; registers without an image stay."""
    match e:
        case Var(name):
            return images.get(name, e)
        case Const():
            return e
        case Add(l, r):
            return Add(substitute(l, images), substitute(r, images))
        case Mul(l, r):
            return Mul(substitute(l, images), substitute(r, images))
    raise TypeError(f"not a register expression: {e!r}")


def is_linear(e: RegisterExpr) -> bool:
    """Products only of the form e · r with r register-free."""
    match e:
        case Var() | Const():
            return True
        case Add(l, r):
            return is_linear(l) and is_linear(r)
        case Mul(l, r):
            if not variables(l):
                return is_linear(r)
            if not variables(r):
                return is_linear(l)
            return False
    raise TypeError(f"not a register expression: {e!r}")


# -- expanded form ----------------------------------------------------------

Monomial = tuple[str, ...]  # sorted register names, repeated by power


@dataclass(frozen=True, slots=True)
class RegisterPolynomial:
    """Σ c·m over monomials m in the registers; equal polynomials compare equal."""

    terms: tuple[tuple[Monomial, Fraction], ...]

    @classmethod
    def from_dict(cls, terms: Mapping[Monomial, Fraction]) -> "RegisterPolynomial":
        return cls(tuple(sorted((m, c) for m, c in terms.items() if c != 0)))

    @classmethod
    def constant(cls, c) -> "RegisterPolynomial":
        return cls.from_dict({(): Fraction(c)})

    @classmethod
    def register(cls, name: str) -> "RegisterPolynomial":
        return cls.from_dict({(name,): Fraction(1)})

    @classmethod
    def of(cls, e: RegisterExpr) -> "RegisterPolynomial":
        match e:
            case Var(name):
                return cls.register(name)
            case Const(value):
                return cls.constant(value)
            case Add(l, r):
                return cls.of(l) + cls.of(r)
            case Mul(l, r):
                return cls.of(l) * cls.of(r)
        raise TypeError(f"not a register expression: {e!r}")

    def __add__(self, other: "RegisterPolynomial") -> "RegisterPolynomial":
        out = dict(self.terms)
        for m, c in other.terms:
            out[m] = out.get(m, Fraction(0)) + c
        return RegisterPolynomial.from_dict(out)

    def __mul__(self, other: "RegisterPolynomial") -> "RegisterPolynomial":
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return RegisterPolynomial.from_dict(out)

    def variables(self) -> set[str]:
        return {name for m, _ in self.terms for name in m}

    def degree(self) -> int:
        return max((len(m) for m, _ in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        return max((m.count(name) for m, _ in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(m == () for m, _ in self.terms)

    def constant_term(self) -> Fraction:
        return dict(self.terms).get((), Fraction(0))

    def coefficient(self, monomial: Monomial) -> Fraction:
        return dict(self.terms).get(monomial, Fraction(0))

    def substitute(self, images: Mapping[str, "RegisterPolynomial"]) -> "RegisterPolynomial":
        total = RegisterPolynomial.constant(0)
        for m, c in self.terms:
            term = RegisterPolynomial.constant(c)
            for name in m:
                term = term * images.get(name, RegisterPolynomial.register(name))
            total = total + term
        return total

    def evaluate(self, valuation: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms:
            for name in m:
                c *= valuation.get(name, Fraction(0))
            total += c
        return total

    def to_expr(self) -> RegisterExpr:
        """Sum of c·x·y·... products, constant term last."""
        parts: list[RegisterExpr] = []
        for m, c in sorted(self.terms, key=lambda t: (t[0] == (), t[0])):
            if m == ():
                parts.append(Const(c))
                continue
            term: RegisterExpr | None = None if c == 1 else Const(c)
            for name in m:
                term = Var(name) if term is None else Mul(term, Var(name))
            parts.append(term)
        if not parts:
            return Const(Fraction(0))
        result = parts[0]
        for p in parts[1:]:
            result = Add(result, p)
        return result


# -- text -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<rat>-?\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[+*()]))")


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        if m is None:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_register_expr(text: str) -> RegisterExpr:
    """Infix syntax: `2*x + 1`, `x0 + x1`, `(x + 1/2)*y`."""
    tokens = _tokens(text)
    index = 0

    def peek() -> tuple[str, str, int]:
        return tokens[index]

    def take() -> tuple[str, str, int]:
        nonlocal index
        index += 1
        return tokens[index - 1]

    def sum_() -> RegisterExpr:
        e = product()
        while peek()[1] == "+":
            take()
            e = Add(e, product())
        return e

    def product() -> RegisterExpr:
        e = atom()
        while peek()[1] == "*":
            take()
            e = Mul(e, atom())
        return e

    def atom() -> RegisterExpr:
        kind, value, pos = take()
        if kind == "rat":
            num, _, den = value.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", pos)
            return Const(Fraction(int(num), int(den)) if den else Fraction(int(num)))
        if kind == "name":
            return Var(value)
        if value == "(":
            e = sum_()
            if take()[1] != ")":
                raise ParseError("expected ')'", tokens[index - 1][2])
            return e
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)

    e = sum_()
    if peek()[0] != "end":
        raise ParseError(f"unexpected {peek()[1]!r}", peek()[2])
    return e


def to_text(e: RegisterExpr) -> str:
    match e:
        case Var(name):
            return name
        case Const(value):
            return format_rational(value)
        case Add(l, r):
            return f"{to_text(l)} + {to_text(r)}"
        case Mul(l, r):
            left = f"({to_text(l)})" if isinstance(l, Add) else to_text(l)
            right = f"({to_text(r)})" if isinstance(r, (Add, Mul)) else to_text(r)
            return f"{left}*{right}"
    raise TypeError(f"not a register expression: {e!r}")
