"""Dimension inference, evaluation and the per-statement report."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional

from ..dimension import Dim, dim_eq, dimless, format_dim, over, power, times
from ..errors import DimensionMismatch, NegativeRadicand, NonIntegralRoot, NotDependent
from ..pi import decompose, pi_groups, solve_exponents, ScalingLaw
from ..lindep import rank
from ..quantity import Quantity, add, div, mul, q_pow, root, scalar_mul, sub
from .model import Model
from .parser import resolve_dim_expr
from .printer import format_dim_expr, format_q_expr
from .nodes import CheckStmt, EqStmt, PiQuery, QBin, QNeg, QNum, QPow, QRoot, QVar, RawEqStmt


def infer_dim(expr, model: Model) -> Dim:
    """Dimension of a quantity expression under the typing rules of the quantity algebra."""
    cls = model.dim_class
    if isinstance(expr, QNum):
        return dimless(cls)
    if isinstance(expr, QVar):
        return model.vars[expr.name].dim
    if isinstance(expr, QNeg):
        return infer_dim(expr.operand, model)
    if isinstance(expr, QPow):
        return power(infer_dim(expr.base, model), expr.exp)
    if isinstance(expr, QRoot):
        d = infer_dim(expr.operand, model)
        if any(e % expr.k for e in d.exps):
            raise NonIntegralRoot(
                f"cannot take root {expr.k} of {format_dim(d, model.dim_aliases)}",
                span=expr.span,
            )
        return Dim(cls, tuple(e // expr.k for e in d.exps))
    if isinstance(expr, QBin):
        l = infer_dim(expr.left, model)
        r = infer_dim(expr.right, model)
        if expr.op == "*":
            return times(l, r)
        if expr.op == "/":
            return over(l, r)
        if not dim_eq(l, r):
            verb = "add" if expr.op == "+" else "subtract"
            raise DimensionMismatch(
                f"cannot {verb} {format_dim(l, model.dim_aliases)} and {format_dim(r, model.dim_aliases)}",
                l,
                r,
                span=expr.span,
            )
        return l
    raise TypeError(f"not a quantity expression: {expr!r}")


def evaluate(expr, model: Model, values: Mapping[str, Quantity] | None = None) -> Quantity:
    """Evaluate with quantity arithmetic; literals are dimensionless in the reference system."""
    if values is None:
        values = model.values()
    if isinstance(expr, QNum):
        return Quantity(expr.value, dimless(model.dim_class), model.registry.reference_name, model.registry)
    if isinstance(expr, QVar):
        if expr.name not in values:
            return model.quantity(expr.name)  # raises MissingValue
        return values[expr.name]
    if isinstance(expr, QNeg):
        return scalar_mul(-1.0, evaluate(expr.operand, model, values))
    if isinstance(expr, QPow):
        return q_pow(evaluate(expr.base, model, values), expr.exp)
    if isinstance(expr, QRoot):
        return root(evaluate(expr.operand, model, values), expr.k)
    if isinstance(expr, QBin):
        l = evaluate(expr.left, model, values)
        r = evaluate(expr.right, model, values)
        return {"+": add, "-": sub, "*": mul, "/": div}[expr.op](l, r)
    raise TypeError(f"not a quantity expression: {expr!r}")


def eval_raw(expr, measures: Mapping[str, float]) -> float:
    """Evaluate as bare floating point over the given measures, with no dimension checks."""
    if isinstance(expr, QNum):
        return expr.value
    if isinstance(expr, QVar):
        return measures[expr.name]
    if isinstance(expr, QNeg):
        return -eval_raw(expr.operand, measures)
    if isinstance(expr, QPow):
        b = eval_raw(expr.base, measures)
        if b == 0.0 and expr.exp < 0:
            return math.inf
        return b**expr.exp
    if isinstance(expr, QRoot):
        v = eval_raw(expr.operand, measures)
        if v < 0:
            if expr.k % 2 == 0:
                raise NegativeRadicand(f"even root of negative value {v!r}")
            return -((-v) ** (1.0 / expr.k))
        return math.sqrt(v) if expr.k == 2 else v ** (1.0 / expr.k)
    if isinstance(expr, QBin):
        l = eval_raw(expr.left, measures)
        r = eval_raw(expr.right, measures)
        if expr.op == "+":
            return l + r
        if expr.op == "-":
            return l - r
        if expr.op == "*":
            return l * r
        if r == 0.0:
            return math.copysign(math.inf, l) if l else math.nan
        return l / r
    raise TypeError(f"not a quantity expression: {expr!r}")


def resolve_dim(expr, model: Model) -> Dim:
    return resolve_dim_expr(expr, model.dim_class, model.dim_aliases)


@dataclass
class Entry:
    line: int
    kind: str
    label: str
    status: str  # "pass", "fail" or "info"
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    message: str = ""
    data: dict = field(default_factory=dict)
    col: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "line": self.line,
            "col": self.col,
            "kind": self.kind,
            "label": self.label,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "message": self.message,
            "data": self.data,
        }


@dataclass
class Report:
    entries: list[Entry]

    @property
    def passed(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.status == "fail"]

    def to_dict(self) -> dict:
        return {"passed": self.passed, "entries": [e.to_dict() for e in self.entries]}


def _dim_json(d: Dim, model: Model) -> dict:
    return {"name": format_dim(d, model.dim_aliases), "exps": list(d.exps)}


def run_pi_query(q: PiQuery, model: Model) -> tuple[dict, Optional[ScalingLaw]]:
    """Decompose the governing variables of ``q`` and, with a target, solve its scaling law.

    Raises :class:`NotDependent` when the target is outside the span.
    """
    if q.given is not None:
        governing = list(q.given)
    else:
        governing = [n for n in model.vars if n != q.target]
    named = [(n, model.vars[n].dim) for n in governing]
    dec = decompose(named)
    all_values = model.values()
    values = all_values if all(n in all_values for n in governing) else None
    groups = pi_groups(dec, values)
    data = {
        "target": q.target,
        "given": governing,
        "mode": "auto" if q.given is None else "given",
        "total": len(governing),
        "rank": rank([d for _, d in named]),
        "independent": [n for n, _ in dec.independent],
        "dependent": [
            {"name": n, "p": ev.p, "ps": list(ev.ps)} for n, _, ev in dec.dependent
        ],
        "groups": [g.to_dict() for g in groups],
        "law": None,
    }
    law = None
    if q.target is not None:
        tdim = model.vars[q.target].dim
        ev = solve_exponents(tdim, dec.independent_dims)
        law = ScalingLaw(q.target, ev.p, tuple(zip(dec.independent_names, ev.ps)), tuple(groups))
        data["law"] = law.to_dict()
    return data, law


def check(model: Model) -> Report:
    entries = []
    aliases = model.dim_aliases
    for stmt in model.statements:
        if isinstance(stmt, CheckStmt):
            l, r = resolve_dim(stmt.lhs, model), resolve_dim(stmt.rhs, model)
            ok = dim_eq(l, r)
            ln, rn = format_dim(l, aliases), format_dim(r, aliases)
            entries.append(
                Entry(
                    stmt.line,
                    "check",
                    f"{format_dim_expr(stmt.lhs)} == {format_dim_expr(stmt.rhs)}",
                    "pass" if ok else "fail",
                    ln,
                    rn,
                    "" if ok else f"{ln} != {rn}",
                    {"lhs": _dim_json(l, model), "rhs": _dim_json(r, model)},
                )
            )
        elif isinstance(stmt, (EqStmt, RawEqStmt)):
            declared = resolve_dim(stmt.dim, model)
            label = f"{stmt.name} : {format_dim_expr(stmt.dim)} = {format_q_expr(stmt.expr)}"
            kind = "eq" if isinstance(stmt, EqStmt) else "raweq"
            try:
                inferred = infer_dim(stmt.expr, model)
                err = None
            except (DimensionMismatch, NonIntegralRoot) as exc:
                inferred, err = None, exc
            data = {
                "name": stmt.name,
                "declared": _dim_json(declared, model),
                "inferred": _dim_json(inferred, model) if inferred is not None else None,
            }
            dn = format_dim(declared, aliases)
            inn = format_dim(inferred, aliases) if inferred is not None else None
            col = err.span[1] if err is not None and err.span else None
            if kind == "raweq":
                # raw equations are tested numerically, not typed
                entries.append(
                    Entry(stmt.line, kind, label, "info", dn, inn,
                          "declared output dimension recorded for covariance testing", data)
                )
            elif err is not None:
                entries.append(Entry(stmt.line, kind, label, "fail", dn, None, str(err), data, col))
            else:
                ok = dim_eq(declared, inferred)
                entries.append(
                    Entry(stmt.line, kind, label, "pass" if ok else "fail", dn, inn,
                          "" if ok else f"declared {dn} but expression has {inn}", data)
                )
        elif isinstance(stmt, PiQuery):
            label = "pigroups " + (stmt.target or "") + (
                " auto" if stmt.given is None else " given " + ", ".join(stmt.given)
            )
            label = label.replace("  ", " ")
            try:
                data, law = run_pi_query(stmt, model)
                msg = str(law) if law else ", ".join(g["group"] for g in data["groups"])
                entries.append(Entry(stmt.line, "pigroups", label, "pass", message=msg, data=data))
            except NotDependent as exc:
                msg = f"unreachable base: {', '.join(exc.unreachable)}"
                entries.append(
                    Entry(stmt.line, "pigroups", label, "fail", message=msg,
                          data={"target": stmt.target, "unreachable": list(exc.unreachable)})
                )
    return Report(entries)
