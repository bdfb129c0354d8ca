from src.cra.checks import check_copyless, check_linear, check_normal_form
from src.cra.compile import compile_expr_to_ccra
from src.cra.convert import ccra_to_expr
from src.cra.machine import Cra, compose_substitutions, cra_values, eval_cra
from src.cra.regexpr import Add, Const, Mul, RegisterExpr, Var, parse_register_expr

__all__ = [
    "Add",
    "Const",
    "Cra",
    "Mul",
    "RegisterExpr",
    "Var",
    "ccra_to_expr",
    "check_copyless",
    "check_linear",
    "check_normal_form",
    "compile_expr_to_ccra",
    "compose_substitutions",
    "cra_values",
    "eval_cra",
    "parse_register_expr",
]
