from src.lrs.classify import PolyRatVerdict, classify_polyrat, lrs_to_expr, series_to_expr
from src.lrs.recurrence import Lrs, char_poly, eval_lrs, lrs_to_series, lrs_to_wa, lrs_values, series_to_lrs

__all__ = [
    "Lrs",
    "PolyRatVerdict",
    "char_poly",
    "classify_polyrat",
    "eval_lrs",
    "lrs_to_expr",
    "lrs_to_series",
    "lrs_to_wa",
    "lrs_values",
    "series_to_expr",
    "series_to_lrs",
]
