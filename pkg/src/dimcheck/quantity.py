"""Physical quantities: a real value tagged with a unit system and a dimension.

Binary operations return a quantity in the left operand's system. The right
operand is first measured in that system, so results never depend on which
systems the inputs happened to be recorded in.

>>> x = Quantity(3.0, LENGTH)
>>> measure((x + x) / x, "CGS")
2.0
>>> measure(x, "CGS")
300.0
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from numbers import Real

from .dimension import LTM, Dim, dim_eq, dimless, df, format_dim, over, power, times
from .errors import (
    ClassMismatch,
    DimensionMismatch,
    DivisionByZero,
    NegativeRadicand,
    NonIntegralRoot,
    UnknownSystem,
)
from .units import MECHANICS, UnitRegistry, fs

__all__ = [
    "Quantity",
    "val",
    "measure",
    "dim_of",
    "add",
    "sub",
    "mul",
    "div",
    "q_pow",
    "scalar_mul",
    "root",
    "is_judgment",
    "is_dimless_q",
    "deriv_dim",
]


@dataclass(frozen=True)
class Quantity:
    value: float
    dim: Dim
    system: str = ""
    registry: UnitRegistry = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        reg = self.registry
        if reg is None:
            if self.dim.dim_class != LTM:
                raise ValueError(
                    f"quantities of class {self.dim.dim_class.name} need an explicit registry"
                )
            reg = MECHANICS
            object.__setattr__(self, "registry", reg)
        if reg.dim_class != self.dim.dim_class:
            raise ClassMismatch(
                f"registry class {reg.dim_class.name} differs from dimension class "
                f"{self.dim.dim_class.name}"
            )
        if not self.system:
            object.__setattr__(self, "system", reg.reference_name)
        elif self.system not in reg:
            raise UnknownSystem(f"unknown unit system {self.system!r}")
        value = float(self.value)
        if not math.isfinite(value):
            raise ValueError(f"quantity values must be finite, got {self.value!r}")
        object.__setattr__(self, "value", value)

    def __add__(self, other):
        if isinstance(other, Quantity):
            return add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Quantity):
            return sub(self, other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Quantity):
            return mul(self, other)
        if isinstance(other, Real):
            return scalar_mul(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Real):
            return scalar_mul(other, self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            return div(self, other)
        if isinstance(other, Real):
            if other == 0:
                raise DivisionByZero("division by a zero scalar")
            return scalar_mul(1.0 / other, self)
        return NotImplemented

    def __neg__(self):
        return scalar_mul(-1.0, self)

    def __pow__(self, k: int):
        return q_pow(self, k)

    def __str__(self) -> str:
        return f"{self.value!r} {self.system} [{format_dim(self.dim)}]"


def val(system: str, value: float, dim: Dim, registry: UnitRegistry | None = None) -> Quantity:
    """Build a quantity from a measure taken in ``system``."""
    return Quantity(value, dim, system, registry)


def measure(q: Quantity, u2: str) -> float:
    """The number obtained by expressing ``q`` in the units of system ``u2``."""
    return q.value * df(q.dim, fs(q.registry, q.system, u2))


def dim_of(q: Quantity) -> Dim:
    return q.dim


def _like(q: Quantity, value: float, dim: Dim) -> Quantity:
    return Quantity(value, dim, q.system, q.registry)


def _measure_in(q: Quantity, system: str, registry: UnitRegistry) -> float:
    # the right operand may come from another registry of the same class
    if q.registry is registry or system in q.registry:
        return measure(q, system)
    raise UnknownSystem(f"system {system!r} is not known to the registry of {q}")


def _check_class(q1: Quantity, q2: Quantity) -> None:
    if q1.dim.dim_class != q2.dim.dim_class:
        raise ClassMismatch(
            f"dimension classes differ: {q1.dim.dim_class.name} vs {q2.dim.dim_class.name}"
        )


def _check_same_dim(op: str, q1: Quantity, q2: Quantity) -> None:
    _check_class(q1, q2)
    if not dim_eq(q1.dim, q2.dim):
        raise DimensionMismatch(
            f"cannot {op} quantities of dimension {format_dim(q1.dim)} and {format_dim(q2.dim)}",
            q1.dim,
            q2.dim,
        )


def add(q1: Quantity, q2: Quantity) -> Quantity:
    _check_same_dim("add", q1, q2)
    return _like(q1, q1.value + _measure_in(q2, q1.system, q1.registry), q1.dim)


def sub(q1: Quantity, q2: Quantity) -> Quantity:
    _check_same_dim("subtract", q1, q2)
    return _like(q1, q1.value - _measure_in(q2, q1.system, q1.registry), q1.dim)


def mul(q1: Quantity, q2: Quantity) -> Quantity:
    _check_class(q1, q2)
    return _like(q1, q1.value * _measure_in(q2, q1.system, q1.registry), times(q1.dim, q2.dim))


def div(q1: Quantity, q2: Quantity) -> Quantity:
    _check_class(q1, q2)
    denom = _measure_in(q2, q1.system, q1.registry)
    if denom == 0.0:
        raise DivisionByZero(f"division by a quantity measuring 0 in {q1.system}")
    return _like(q1, q1.value / denom, over(q1.dim, q2.dim))


def q_pow(q: Quantity, k: int) -> Quantity:
    if isinstance(k, bool) or int(k) != k:
        raise TypeError(f"quantity powers must be integers, got {k!r}")
    k = int(k)
    if k < 0 and q.value == 0.0:
        raise DivisionByZero("negative power of a zero quantity")
    return _like(q, q.value**k, power(q.dim, k))


def scalar_mul(r: float, q: Quantity) -> Quantity:
    if not math.isfinite(r):
        raise ValueError(f"scalar must be finite, got {r!r}")
    return _like(q, r * q.value, q.dim)


def root(q: Quantity, k: int) -> Quantity:
    """The ``k``-th root of ``q``; every exponent of its dimension must divide by ``k``."""
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise ValueError(f"root order must be a positive integer, got {k!r}")
    k = int(k)
    if any(e % k for e in q.dim.exps):
        raise NonIntegralRoot(
            f"cannot take root {k} of dimension {format_dim(q.dim)}: exponents not divisible by {k}"
        )
    if q.value < 0:
        if k % 2 == 0:
            raise NegativeRadicand(f"even root of negative value {q.value!r}")
        v = -((-q.value) ** (1.0 / k))
    else:
        v = q.value ** (1.0 / k) if k != 2 else math.sqrt(q.value)
    return _like(q, v, Dim(q.dim.dim_class, tuple(e // k for e in q.dim.exps)))


def is_judgment(q: Quantity, d: Dim) -> bool:
    """``Is q d``: whether ``q`` has dimension ``d``."""
    if q.dim.dim_class != d.dim_class:
        raise ClassMismatch(f"dimension classes differ: {q.dim.dim_class.name} vs {d.dim_class.name}")
    return dim_eq(q.dim, d)


def is_dimless_q(q: Quantity) -> bool:
    return dim_eq(q.dim, dimless(q.dim.dim_class))


def deriv_dim(d_domain: Dim, d_codomain: Dim) -> Dim:
    """Codomain dimension of the derivative of a map from ``d_domain`` to ``d_codomain``."""
    return over(d_codomain, d_domain)
