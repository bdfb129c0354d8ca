"""Expression trees for rational sequences.

Atoms are arithmetic progressions, geometric progressions and finite-support
sequences; operators combine sequences term-wise, by convolution, or positionally.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from src.errors import ArityError


@dataclass(frozen=True, slots=True)
class Arith:
    """⟨a + b·n⟩"""

    a: Fraction
    b: Fraction


@dataclass(frozen=True, slots=True)
class Geo:
    """⟨a·λⁿ⟩"""

    a: Fraction
    lam: Fraction


@dataclass(frozen=True, slots=True)
class Fin:
    """v₀, v₁, ..., v_{m-1}, 0, 0, ..."""

    values: tuple[Fraction, ...]


@dataclass(frozen=True, slots=True)
class Sum:
    left: "SeqExpr"
    right: "SeqExpr"


@dataclass(frozen=True, slots=True)
class Hadamard:
    left: "SeqExpr"
    right: "SeqExpr"


@dataclass(frozen=True, slots=True)
class Cauchy:
    left: "SeqExpr"
    right: "SeqExpr"


@dataclass(frozen=True, slots=True)
class Star:
    child: "SeqExpr"


@dataclass(frozen=True, slots=True)
class Shift:
    """a, e₀, e₁, ..."""

    a: Fraction
    child: "SeqExpr"


@dataclass(frozen=True, slots=True)
class Shuffle:
    """Position k·i + j holds term i of child j."""

    children: tuple["SeqExpr", ...]

    def __post_init__(self):
        if not self.children:
            raise ArityError("shuffle needs at least one argument")


SeqExpr = Union[Arith, Geo, Fin, Sum, Hadamard, Cauchy, Star, Shift, Shuffle]

ATOMS = (Arith, Geo, Fin)
BINARY = (Sum, Hadamard, Cauchy)


def children(e: SeqExpr) -> tuple[SeqExpr, ...]:
    match e:
        case Sum(l, r) | Hadamard(l, r) | Cauchy(l, r):
            return (l, r)
        case Star(c) | Shift(_, c):
            return (c,)
        case Shuffle(cs):
            return cs
    return ()


def walk(e: SeqExpr) -> Iterator[SeqExpr]:
    """Pre-order traversal."""
    stack = [e]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def size(e: SeqExpr) -> int:
    return sum(1 for _ in walk(e))
