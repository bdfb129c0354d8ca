from src.ratmath.binomial import (
    BinomialCertificate,
    BinomialFactor,
    binomial_factorize,
    binomial_multiple_extend,
    coprime_lift,
)
from src.ratmath.pfrac import PartialFractionTerm, partial_fractions, recombine
from src.ratmath.polynomial import Polynomial
from src.ratmath.ratfunc import RationalFunction, berlekamp_massey, series_expand

__all__ = [
    "BinomialCertificate",
    "BinomialFactor",
    "PartialFractionTerm",
    "Polynomial",
    "RationalFunction",
    "berlekamp_massey",
    "binomial_factorize",
    "binomial_multiple_extend",
    "coprime_lift",
    "partial_fractions",
    "recombine",
    "series_expand",
]
