"""Syntactic fragments of the expression language.

Each fragment is the set of expressions built from a fixed set of atoms and operators;
a conversion states the fragment it accepts and `require` enforces it.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from src.errors import FragmentError
from src.seqexpr.ast import Arith, Fin, Geo, Hadamard, SeqExpr, Shift, Shuffle, Sum, walk


class FragmentKind(str, Enum):
    RAT = "Rat"
    POLY_RAT = "PolyRat"
    DET = "Det"
    FIN_WA = "FinWa"
    LINEAR_CCRA = "LinearCcra"


@dataclass(frozen=True, slots=True)
class Fragment:
    kind: FragmentKind
    lam: Fraction | None = None  # only for DET

    def __str__(self) -> str:
        if self.kind is FragmentKind.DET:
            return f"Det({self.lam})"
        return self.kind.value


RAT = Fragment(FragmentKind.RAT)
POLY_RAT = Fragment(FragmentKind.POLY_RAT)
FIN_WA = Fragment(FragmentKind.FIN_WA)
LINEAR_CCRA = Fragment(FragmentKind.LINEAR_CCRA)

_ALLOWED = {
    FragmentKind.POLY_RAT: (Arith, Geo, Fin, Sum, Hadamard, Shift, Shuffle),
    FragmentKind.FIN_WA: (Geo, Sum, Shift, Shuffle),
    FragmentKind.LINEAR_CCRA: (Arith, Geo, Sum, Shift, Shuffle),
}


def det(lam) -> Fragment:
    return Fragment(FragmentKind.DET, Fraction(lam))


def _first_outside(e: SeqExpr, allowed: tuple[type, ...]) -> SeqExpr | None:
    return next((node for node in walk(e) if not isinstance(node, allowed)), None)


def _det_ratio(e: SeqExpr) -> tuple[bool, Fraction | None]:
    """(in some Det fragment, its λ if a geometric atom occurs)."""
    ratios = set()
    for node in walk(e):
        if isinstance(node, Geo):
            ratios.add(node.lam)
        elif not isinstance(node, (Shift, Shuffle)):
            return False, None
    if len(ratios) > 1:
        return False, None
    return True, next(iter(ratios), None)


def fragment_of(e: SeqExpr) -> set[Fragment]:
    found = {RAT}
    for kind, allowed in _ALLOWED.items():
        if _first_outside(e, allowed) is None:
            found.add(Fragment(kind))
    ok, lam = _det_ratio(e)
    if ok and lam is not None:
        found.add(det(lam))
    return found


def in_fragment(e: SeqExpr, fragment: Fragment) -> bool:
    if fragment.kind is FragmentKind.RAT:
        return True
    if fragment.kind is FragmentKind.DET:
        ok, lam = _det_ratio(e)
        return ok and lam in (None, fragment.lam)
    return _first_outside(e, _ALLOWED[fragment.kind]) is None


def require(e: SeqExpr, fragment: Fragment) -> None:
    """Raise FragmentError naming the first offending node when e is outside the fragment."""
    if in_fragment(e, fragment):
        return
    if fragment.kind is FragmentKind.DET:
        raise FragmentError(f"expression is not in {fragment}")
    offender = _first_outside(e, _ALLOWED[fragment.kind])
    raise FragmentError(f"{type(offender).__name__} is not allowed in the {fragment} fragment")

