"""Concrete syntax for sequence expressions.

    expr := term (('+' | '*' | '.') term)*      '.' binds tighter than '*', '*' than '+'
    term := arith(rat, rat) | geo(rat, rat) | fin[rat, ...] | star(expr)
          | shift(rat, expr) | shuffle(expr, ...) | (expr)
    rat  := ['-'] integer ['/' positive-integer]
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from src.errors import ArityError, ParseError
from src.ratmath.rational import format_rational
from src.seqexpr.ast import Arith, Cauchy, Fin, Geo, Hadamard, SeqExpr, Shift, Shuffle, Star, Sum

_TOKEN = re.compile(r"\s*(?:(?P<rat>-?\d+(?:\s*/\s*\d+)?)|(?P<word>[a-z]+)|(?P<punct>[()\[\],+*.]))")

# operator -> (precedence, node)
_BINARY = {"+": (1, Sum), "*": (2, Hadamard), ".": (3, Cauchy)}
_PRECEDENCE = {Sum: 1, Hadamard: 2, Cauchy: 3}
_SYMBOL = {Sum: "+", Hadamard: "*", Cauchy: "."}
_ATOM_PRECEDENCE = 4


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, text: str) -> Token:
        if self.current.text != text or self.current.kind == "end":
            found = self.current.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.current.position)
        return self.advance()

    def parse(self) -> SeqExpr:
        expr = self.expression(1)
        if self.current.kind != "end":
            raise ParseError(f"unexpected {self.current.text!r}", self.current.position)
        return expr

    def expression(self, min_precedence: int) -> SeqExpr:
        left = self.term()
        while self.current.kind == "punct" and self.current.text in _BINARY:
            precedence, node = _BINARY[self.current.text]
            if precedence < min_precedence:
                break
            self.advance()
            right = self.expression(precedence + 1)
            left = node(left, right)
        return left

    def rational(self) -> Fraction:
        token = self.current
        if token.kind != "rat":
            raise ParseError(f"expected a rational, found {token.text or 'end of input'!r}", token.position)
        self.advance()
        num, _, den = token.text.partition("/")
        if den and int(den) == 0:
            raise ParseError("zero denominator", token.position)
        return Fraction(int(num), int(den)) if den else Fraction(int(num))

    def term(self) -> SeqExpr:
        token = self.current
        if token.text == "(":
            self.advance()
            inner = self.expression(1)
            self.expect(")")
            return inner
        if token.kind != "word":
            raise ParseError(f"expected a term, found {token.text or 'end of input'!r}", token.position)
        self.advance()
        match token.text:
            case "arith":
                self.expect("(")
                a = self.rational()
                self.expect(",")
                b = self.rational()
                self.expect(")")
                return Arith(a, b)
            case "geo":
                self.expect("(")
                a = self.rational()
                self.expect(",")
                lam = self.rational()
                self.expect(")")
                return Geo(a, lam)
            case "fin":
                self.expect("[")
                values = [self.rational()]
                while self.current.text == ",":
                    self.advance()
                    values.append(self.rational())
                self.expect("]")
                return Fin(tuple(values))
            case "star":
                self.expect("(")
                inner = self.expression(1)
                self.expect(")")
                return Star(inner)
            case "shift":
                self.expect("(")
                a = self.rational()
                self.expect(",")
                inner = self.expression(1)
                self.expect(")")
                return Shift(a, inner)
            case "shuffle":
                self.expect("(")
                if self.current.text == ")":
                    raise ArityError(f"shuffle needs at least one argument (position {token.position})")
                parts = [self.expression(1)]
                while self.current.text == ",":
                    self.advance()
                    parts.append(self.expression(1))
                self.expect(")")
                return Shuffle(tuple(parts))
        raise ParseError(f"unknown operator {token.text!r}", token.position)


def parse(text: str) -> SeqExpr:
    return Parser(text).parse()


def _precedence(e: SeqExpr) -> int:
    return _PRECEDENCE.get(type(e), _ATOM_PRECEDENCE)


def _wrap(e: SeqExpr, min_precedence: int) -> str:
    body = to_text(e)
    return f"({body})" if _precedence(e) < min_precedence else body


def to_text(e: SeqExpr) -> str:
    """Inverse of `parse`, with the fewest parentheses that keep the tree."""
    r = format_rational
    match e:
        case Arith(a, b):
            return f"arith({r(a)}, {r(b)})"
        case Geo(a, lam):
            return f"geo({r(a)}, {r(lam)})"
        case Fin(values):
            return "fin[" + ", ".join(r(v) for v in values) + "]"
        case Star(child):
            return f"star({to_text(child)})"
        case Shift(a, child):
            return f"shift({r(a)}, {to_text(child)})"
        case Shuffle(parts):
            return "shuffle(" + ", ".join(to_text(p) for p in parts) + ")"
        case Sum(left, right) | Hadamard(left, right) | Cauchy(left, right):
            p = _PRECEDENCE[type(e)]
            return f"{_wrap(left, p)} {_SYMBOL[type(e)]} {_wrap(right, p + 1)}"
    raise TypeError(f"not a sequence expression: {e!r}")
