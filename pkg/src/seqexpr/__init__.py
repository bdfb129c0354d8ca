from src.seqexpr.ast import Arith, Cauchy, Fin, Geo, Hadamard, SeqExpr, Shift, Shuffle, Star, Sum
from src.seqexpr.evaluator import evaluate
from src.seqexpr.fragments import Fragment, FragmentKind, fragment_of
from src.seqexpr.parser import parse, to_text

__all__ = [
    "Arith",
    "Cauchy",
    "Fin",
    "Fragment",
    "FragmentKind",
    "Geo",
    "Hadamard",
    "SeqExpr",
    "Shift",
    "Shuffle",
    "Star",
    "Sum",
    "evaluate",
    "fragment_of",
    "parse",
    "to_text",
]
