from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..dimension import Dim, DimClass
from ..errors import MissingValue
from ..quantity import Quantity
from ..units import UnitRegistry
from .nodes import EqStmt, Item, PiQuery, RawEqStmt, CheckStmt


@dataclass(frozen=True)
class VarInfo:
    dim: Dim
    value: Optional[float] = None
    system: Optional[str] = None


@dataclass(eq=False)
class Model:
    """A parsed model file.

    ``items`` is the ordered source structure (what ``==`` compares); the
    other fields are resolved views built while parsing.
    """

    items: list[Item]
    dim_class: DimClass
    registry: UnitRegistry
    dim_aliases: dict[str, Dim] = field(default_factory=dict)
    vars: dict[str, VarInfo] = field(default_factory=dict)
    equations: dict[str, EqStmt | RawEqStmt] = field(default_factory=dict)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Model):
            return NotImplemented
        return self.items == other.items

    @property
    def statements(self) -> list[CheckStmt | EqStmt | RawEqStmt | PiQuery]:
        return [it for it in self.items if isinstance(it, (CheckStmt, EqStmt, RawEqStmt, PiQuery))]

    def quantity(self, name: str) -> Quantity:
        info = self.vars[name]
        if info.value is None:
            raise MissingValue(f"variable {name!r} has no value")
        return Quantity(info.value, info.dim, info.system, self.registry)

    def values(self) -> dict[str, Quantity]:
        return {n: self.quantity(n) for n, v in self.vars.items() if v.value is not None}
