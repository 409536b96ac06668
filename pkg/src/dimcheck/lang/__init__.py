"""Model-file language: parser, dimension checker and canonical printer."""

from .checker import Entry, Report, check, eval_raw, evaluate, infer_dim, resolve_dim, run_pi_query
from .model import Model, VarInfo
from .parser import parse, parse_file, resolve_dim_expr
from .printer import format_dim_expr, format_model, format_q_expr

__all__ = [
    "Entry",
    "Model",
    "Report",
    "VarInfo",
    "check",
    "eval_raw",
    "evaluate",
    "format_dim_expr",
    "format_model",
    "format_q_expr",
    "infer_dim",
    "parse",
    "parse_file",
    "resolve_dim",
    "resolve_dim_expr",
    "run_pi_query",
]
