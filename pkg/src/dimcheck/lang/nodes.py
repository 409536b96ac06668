"""Syntax trees for model files.

Source spans are kept for diagnostics but excluded from equality, so two
models compare equal when they have the same structure regardless of layout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

# (line, col, end_col), 1-based, end exclusive
Span = Optional[tuple]


def _span():
    return field(default=None, compare=False, repr=False)


# dimension expressions


@dataclass(frozen=True)
class DName:
    name: str
    span: Span = _span()


@dataclass(frozen=True)
class DOne:
    span: Span = _span()


@dataclass(frozen=True)
class DBin:
    op: str  # "*" or "/"
    left: "DimExpr"
    right: "DimExpr"
    span: Span = _span()


@dataclass(frozen=True)
class DPow:
    base: "DimExpr"
    exp: int
    span: Span = _span()


DimExpr = Union[DName, DOne, DBin, DPow]


# quantity expressions


@dataclass(frozen=True)
class QVar:
    name: str
    span: Span = _span()


@dataclass(frozen=True)
class QNum:
    value: float
    span: Span = _span()


@dataclass(frozen=True)
class QNeg:
    operand: "QExpr"
    span: Span = _span()


@dataclass(frozen=True)
class QBin:
    op: str  # one of + - * /
    left: "QExpr"
    right: "QExpr"
    span: Span = _span()


@dataclass(frozen=True)
class QPow:
    base: "QExpr"
    exp: int
    span: Span = _span()


@dataclass(frozen=True)
class QRoot:
    operand: "QExpr"
    k: int
    span: Span = _span()


QExpr = Union[QVar, QNum, QNeg, QBin, QPow, QRoot]


# statements; ``line`` is diagnostic only


@dataclass(frozen=True)
class ClassDecl:
    name: str
    bases: tuple[str, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class SystemDecl:
    name: str
    sizes: Optional[tuple[float, ...]]  # None marks the reference system
    line: int = field(default=0, compare=False)

    @property
    def is_reference(self) -> bool:
        return self.sizes is None


@dataclass(frozen=True)
class DimDecl:
    name: str
    expr: DimExpr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class VarDecl:
    name: str
    dim: DimExpr
    value: Optional[float] = None
    system: Optional[str] = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class CheckStmt:
    lhs: DimExpr
    rhs: DimExpr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class EqStmt:
    name: str
    dim: DimExpr
    expr: QExpr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class RawEqStmt:
    name: str
    dim: DimExpr
    expr: QExpr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PiQuery:
    target: Optional[str]
    given: Optional[tuple[str, ...]]  # None means "auto"
    line: int = field(default=0, compare=False)


Declaration = Union[ClassDecl, SystemDecl, DimDecl, VarDecl]
Statement = Union[CheckStmt, EqStmt, RawEqStmt, PiQuery]
Item = Union[Declaration, Statement]
