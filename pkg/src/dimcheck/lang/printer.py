"""Canonical text rendering of models; ``parse(format_model(m)) == m``."""

from __future__ import annotations

from .model import Model
from .nodes import (
    CheckStmt,
    ClassDecl,
    DBin,
    DimDecl,
    DName,
    DOne,
    DPow,
    EqStmt,
    PiQuery,
    QBin,
    QNeg,
    QNum,
    QPow,
    QRoot,
    QVar,
    RawEqStmt,
    SystemDecl,
    VarDecl,
)

_QPREC = {"+": 1, "-": 1, "*": 2, "/": 2}
_NEG_PREC = 3
_ATOM_PREC = 5


def _num(v: float) -> str:
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def format_dim_expr(e) -> str:
    if isinstance(e, DName):
        return e.name
    if isinstance(e, DOne):
        return "1"
    if isinstance(e, DPow):
        base = format_dim_expr(e.base)
        if isinstance(e.base, (DBin, DPow)):
            base = f"({base})"
        return f"{base}^{e.exp}"
    if isinstance(e, DBin):
        left = format_dim_expr(e.left)
        right = format_dim_expr(e.right)
        if isinstance(e.right, DBin):
            right = f"({right})"
        return f"{left} {e.op} {right}"
    raise TypeError(f"not a dimension expression: {e!r}")


def _qprec(e) -> int:
    if isinstance(e, QBin):
        return _QPREC[e.op]
    if isinstance(e, QNeg):
        return _NEG_PREC
    if isinstance(e, QPow):
        return 4
    return _ATOM_PREC


def format_q_expr(e) -> str:
    if isinstance(e, QNum):
        return _num(e.value)
    if isinstance(e, QVar):
        return e.name
    if isinstance(e, QRoot):
        return f"root({format_q_expr(e.operand)}, {e.k})"
    if isinstance(e, QNeg):
        inner = format_q_expr(e.operand)
        if _qprec(e.operand) < _NEG_PREC:
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(e, QPow):
        base = format_q_expr(e.base)
        if _qprec(e.base) < _ATOM_PREC:
            base = f"({base})"
        return f"{base}^{e.exp}"
    if isinstance(e, QBin):
        p = _QPREC[e.op]
        left = format_q_expr(e.left)
        right = format_q_expr(e.right)
        if _qprec(e.left) < p:
            left = f"({left})"
        if _qprec(e.right) <= p:
            right = f"({right})"
        return f"{left} {e.op} {right}"
    raise TypeError(f"not a quantity expression: {e!r}")


def format_item(it) -> str:
    if isinstance(it, ClassDecl):
        return f"class {it.name} {' '.join(it.bases)}"
    if isinstance(it, SystemDecl):
        if it.sizes is None:
            return f"system {it.name} reference"
        return f"system {it.name} {' '.join(_num(s) for s in it.sizes)}"
    if isinstance(it, DimDecl):
        return f"dim {it.name} = {format_dim_expr(it.expr)}"
    if isinstance(it, VarDecl):
        s = f"var {it.name} : {format_dim_expr(it.dim)}"
        if it.value is not None:
            s += f" = {_num(it.value)} {it.system}"
        return s
    if isinstance(it, CheckStmt):
        return f"check {format_dim_expr(it.lhs)} == {format_dim_expr(it.rhs)}"
    if isinstance(it, (EqStmt, RawEqStmt)):
        kw = "eq" if isinstance(it, EqStmt) else "raweq"
        return f"{kw} {it.name} : {format_dim_expr(it.dim)} = {format_q_expr(it.expr)}"
    if isinstance(it, PiQuery):
        head = "pigroups" + (f" {it.target}" if it.target else "")
        if it.given is None:
            return head + " auto"
        return head + " given " + ", ".join(it.given)
    raise TypeError(f"not a model item: {it!r}")


def format_model(model: Model) -> str:
    return "\n".join(format_item(it) for it in model.items) + "\n"
