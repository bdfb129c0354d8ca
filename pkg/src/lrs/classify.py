"""Poly-rationality of recurrences and the recurrence → expression pipeline.

A sequence is poly-rational iff its reduced generating function has a denominator
dividing a product of binomials 1 - λx^ℓ. Extending to such a product, splitting into
partial fractions, and writing each R/(1 - λx^ℓ)^k as an expression gives the pipeline.
"""

import logging
from dataclasses import dataclass

from src.config import settings
from src.errors import NotPolyRational
from src.lrs.recurrence import Lrs, lrs_to_series
from src.ratmath.binomial import BinomialCertificate, binomial_multiple_extend
from src.ratmath.pfrac import partial_fractions
from src.ratmath.polynomial import Polynomial
from src.ratmath.ratfunc import RationalFunction
from src.seqexpr.ast import SeqExpr
from src.seqexpr.builders import binomial_term_expr, polynomial_expr, sum_all

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class PolyRatVerdict:
    is_polyrat: bool
    series: RationalFunction
    certificate: BinomialCertificate | None = None
    extended: RationalFunction | None = None
    witness: Polynomial | None = None
    max_ell: int | None = None  # bound used when the answer is negative


def _bound(max_ell: int | None) -> int | None:
    return max_ell if max_ell is not None else settings.max_ell


def classify_series(f: RationalFunction, max_ell: int | None = None) -> PolyRatVerdict:
    f = f.reduced()
    try:
        extended, cert = binomial_multiple_extend(f, _bound(max_ell))
    except NotPolyRational as e:
        logger.warning("not poly-rational up to exponent bound %d", e.max_ell)
        return PolyRatVerdict(False, f, witness=e.witness, max_ell=e.max_ell)
    return PolyRatVerdict(True, f, certificate=cert, extended=extended)


def classify_polyrat(lrs: Lrs, max_ell: int | None = None) -> PolyRatVerdict:
    return classify_series(lrs_to_series(lrs), max_ell)


def series_to_expr(f: RationalFunction, max_ell: int | None = None) -> SeqExpr:
    """Poly-rational expression for f; raises NotPolyRational when the extension fails."""
    extended, cert = binomial_multiple_extend(f.reduced(), _bound(max_ell))
    parts = []
    for term in partial_fractions(extended, cert):
        if term.is_polynomial:
            parts.append(polynomial_expr(term.r))
        else:
            parts.append(binomial_term_expr(term.r, term.lam, term.ell, term.k))
    logger.debug("series %s: %d partial-fraction terms", f, len(parts))
    return sum_all(parts)


def lrs_to_expr(lrs: Lrs, max_ell: int | None = None) -> SeqExpr:
    return series_to_expr(lrs_to_series(lrs), max_ell)
