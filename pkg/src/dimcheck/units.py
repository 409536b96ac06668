"""Unit systems and the scaling-factor table between them.

Every system is anchored by the size of each of its base units measured in
the registry's reference system. The factor that converts a measure taken in
system ``u`` into a measure taken in ``u2`` is then ``sizes(u) / sizes(u2)``
per base dimension, which makes conversions path independent by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Sequence

from .dimension import LTM, DimClass
from .errors import ClassMismatch, DuplicateSystem, NonPositiveScale, UnknownSystem


@dataclass(frozen=True)
class UnitSystem:
    name: str
    dim_class: DimClass
    sizes: tuple[float, ...]

    def __post_init__(self):
        sizes = tuple(float(s) for s in self.sizes)
        if len(sizes) != self.dim_class.n:
            raise ValueError(
                f"system {self.name} needs {self.dim_class.n} base sizes, got {len(sizes)}"
            )
        for s in sizes:
            if not (math.isfinite(s) and s > 0):
                raise NonPositiveScale(f"unit sizes must be positive and finite, got {s!r}")
        object.__setattr__(self, "sizes", sizes)

    @property
    def is_reference(self) -> bool:
        return all(s == 1.0 for s in self.sizes)

    @classmethod
    def reference(cls, name: str, dim_class: DimClass) -> "UnitSystem":
        return cls(name, dim_class, (1.0,) * dim_class.n)


class UnitRegistry:
    """Immutable name -> :class:`UnitSystem` map for one dimension class.

    ``register`` returns a new registry; the original is left untouched.
    """

    __slots__ = ("dim_class", "reference_name", "_systems")

    def __init__(self, dim_class: DimClass, reference: str | UnitSystem = "SI"):
        ref = reference if isinstance(reference, UnitSystem) else UnitSystem.reference(reference, dim_class)
        if ref.dim_class != dim_class:
            raise ClassMismatch(f"reference system {ref.name} is not in class {dim_class.name}")
        if not ref.is_reference:
            raise ValueError(f"reference system {ref.name} must have all base sizes equal to 1")
        object.__setattr__(self, "dim_class", dim_class)
        object.__setattr__(self, "reference_name", ref.name)
        object.__setattr__(self, "_systems", MappingProxyType({ref.name: ref}))

    def _with(self, systems: dict[str, UnitSystem]) -> "UnitRegistry":
        new = object.__new__(UnitRegistry)
        object.__setattr__(new, "dim_class", self.dim_class)
        object.__setattr__(new, "reference_name", self.reference_name)
        object.__setattr__(new, "_systems", MappingProxyType(systems))
        return new

    def register(self, system: UnitSystem) -> "UnitRegistry":
        if system.dim_class != self.dim_class:
            raise ClassMismatch(
                f"system {system.name} is in class {system.dim_class.name}, "
                f"registry is {self.dim_class.name}"
            )
        if system.name in self._systems:
            raise DuplicateSystem(f"unit system {system.name!r} already registered")
        if system.is_reference:
            raise ValueError(
                f"system {system.name} has all sizes 1; only {self.reference_name} may be the reference"
            )
        return self._with({**self._systems, system.name: system})

    def __getitem__(self, name: str) -> UnitSystem:
        try:
            return self._systems[name]
        except KeyError:
            raise UnknownSystem(f"unknown unit system {name!r}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._systems

    def __iter__(self):
        return iter(self._systems)

    def __len__(self) -> int:
        return len(self._systems)

    @property
    def reference(self) -> UnitSystem:
        return self._systems[self.reference_name]

    @property
    def systems(self) -> Mapping[str, UnitSystem]:
        return self._systems

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitRegistry):
            return NotImplemented
        return (
            self.dim_class == other.dim_class
            and self.reference_name == other.reference_name
            and dict(self._systems) == dict(other._systems)
        )

    def __hash__(self) -> int:
        return hash((self.dim_class, self.reference_name, tuple(sorted(self._systems))))

    def __setattr__(self, name, value):
        raise AttributeError("UnitRegistry is immutable")

    def __repr__(self) -> str:
        return f"UnitRegistry({self.dim_class.name}, systems={list(self._systems)})"


def register(reg: UnitRegistry, system: UnitSystem) -> UnitRegistry:
    return reg.register(system)


def fs(reg: UnitRegistry, u: str, u2: str) -> tuple[float, ...]:
    """Per-base factors turning a measure in ``u`` into a measure in ``u2``.

    >>> fs(MECHANICS, "SI", "CGS")
    (100.0, 1.0, 1000.0)
    """
    a, b = reg[u], reg[u2]
    if u == u2:
        return (1.0,) * reg.dim_class.n
    return tuple(x / y for x, y in zip(a.sizes, b.sizes))


def make_registry(dim_class: DimClass, reference: str, others: Mapping[str, Sequence[float]] = ()) -> UnitRegistry:
    reg = UnitRegistry(dim_class, reference)
    for name, sizes in dict(others).items():
        reg = reg.register(UnitSystem(name, dim_class, tuple(sizes)))
    return reg


SI = UnitSystem.reference("SI", LTM)
CGS = UnitSystem("CGS", LTM, (0.01, 1.0, 0.001))
MECHANICS = UnitRegistry(LTM, SI).register(CGS)
