from src.wa.ambiguity import Ambiguity, AmbiguityReport, classify_ambiguity
from src.wa.automaton import WeightedAutomaton, count_runs, eval_matrix, eval_runs, trim, values
from src.wa.chained import ChainedLoop, Loop, chained_loop_series, decompose_chained_loops
from src.wa.constructions import compile_expr_to_wa
from src.wa.lasso import finwa_to_expr, lasso_to_expr
from src.wa.series import equiv, wa_series

__all__ = [
    "Ambiguity",
    "AmbiguityReport",
    "ChainedLoop",
    "Loop",
    "WeightedAutomaton",
    "chained_loop_series",
    "classify_ambiguity",
    "compile_expr_to_wa",
    "count_runs",
    "decompose_chained_loops",
    "equiv",
    "eval_matrix",
    "eval_runs",
    "finwa_to_expr",
    "lasso_to_expr",
    "trim",
    "values",
    "wa_series",
]
