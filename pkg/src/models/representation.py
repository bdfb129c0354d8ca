from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from src.cra.machine import Cra, cra_values
from src.lrs.recurrence import Lrs, lrs_values
from src.ratmath.ratfunc import RationalFunction, series_expand
from src.seqexpr.ast import SeqExpr
from src.seqexpr.evaluator import evaluate
from src.wa.automaton import WeightedAutomaton, values


class Kind(str, Enum):
    EXPR = "expr"
    WA = "wa"
    CCRA = "ccra"
    LRS = "lrs"
    SERIES = "series"


@dataclass(frozen=True)
class Representation:
    """One of the five equivalent presentations of a sequence. Format-agnostic."""

    kind: Kind
    value: SeqExpr | WeightedAutomaton | Cra | Lrs | RationalFunction
    source: str | None = None  # file path or "-" when read from input

    @classmethod
    def expr(cls, e: SeqExpr, source: str | None = None) -> "Representation":
        return cls(Kind.EXPR, e, source)

    @classmethod
    def wa(cls, a: WeightedAutomaton, source: str | None = None) -> "Representation":
        return cls(Kind.WA, a, source)

    @classmethod
    def ccra(cls, c: Cra, source: str | None = None) -> "Representation":
        return cls(Kind.CCRA, c, source)

    @classmethod
    def lrs(cls, l: Lrs, source: str | None = None) -> "Representation":
        return cls(Kind.LRS, l, source)

    @classmethod
    def series(cls, f: RationalFunction, source: str | None = None) -> "Representation":
        return cls(Kind.SERIES, f, source)

    def terms(self, n: int) -> list[Fraction]:
        """First n terms of the sequence, by the representation's own semantics."""
        match self.kind:
            case Kind.EXPR:
                return evaluate(self.value, n)
            case Kind.WA:
                return values(self.value, n)
            case Kind.CCRA:
                return cra_values(self.value, n)
            case Kind.LRS:
                return lrs_values(self.value, n)
            case Kind.SERIES:
                return series_expand(self.value, n)
        raise ValueError(f"unknown representation kind {self.kind}")

    @property
    def label(self) -> str:
        return f"{self.kind.value} ({self.source})" if self.source else self.kind.value
