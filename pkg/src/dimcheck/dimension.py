"""Dimensions as integer exponent vectors over a class of base dimensions.

A :class:`Dim` is an element of the free abelian group generated by the
base symbols of its :class:`DimClass`. Multiplication of dimensions adds
exponent vectors, division subtracts them, and integer powers scale them.

>>> Force = MASS * LENGTH / TIME**2
>>> Force.exps
(1, -2, 1)
>>> df(Force, [2.0, 3.0, 5.0])
1.1111111111111112
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ClassMismatch, LengthMismatch, NonPositiveScale, UnknownBase

_IDENT = re.compile(r"[^\W\d]\w*\Z")


@dataclass(frozen=True)
class DimClass:
    """An ordered list of base-dimension symbols, e.g. ``L T M``."""

    name: str
    bases: tuple[str, ...]

    def __post_init__(self):
        bases = tuple(self.bases)
        object.__setattr__(self, "bases", bases)
        if not bases:
            raise ValueError("a dimension class needs at least one base")
        for b in bases:
            if not isinstance(b, str) or not _IDENT.match(b):
                raise ValueError(f"invalid base symbol {b!r}")
        if len(set(bases)) != len(bases):
            raise ValueError(f"duplicate base symbols in {bases}")

    @property
    def n(self) -> int:
        return len(self.bases)

    def index(self, symbol: str) -> int:
        try:
            return self.bases.index(symbol)
        except ValueError:
            raise UnknownBase(f"{symbol!r} is not a base of class {self.name}") from None

    def base(self, symbol: str) -> "Dim":
        return base_dim(self, symbol)

    @property
    def dimless(self) -> "Dim":
        return dimless(self)

    def dim(self, exps: Iterable[int]) -> "Dim":
        return Dim(self, tuple(exps))


@dataclass(frozen=True)
class Dim:
    """Integer exponent vector over ``dim_class``.

    Supports ``*`` (times), ``/`` (over) and ``**`` with an integer exponent.
    """

    dim_class: DimClass
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exps)
        for e in exps:
            if isinstance(e, bool) or not isinstance(e, int):
                # accept integral numpy scalars and the like, reject 1.5
                if int(e) != e:
                    raise TypeError(f"dimension exponents must be integers, got {e!r}")
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.dim_class.n:
            raise LengthMismatch(
                f"class {self.dim_class.name} has {self.dim_class.n} bases, got {len(exps)} exponents"
            )
        object.__setattr__(self, "exps", exps)

    def __mul__(self, other: "Dim") -> "Dim":
        if not isinstance(other, Dim):
            return NotImplemented
        return times(self, other)

    def __truediv__(self, other: "Dim") -> "Dim":
        if not isinstance(other, Dim):
            return NotImplemented
        return over(self, other)

    def __pow__(self, k: int) -> "Dim":
        return power(self, k)

    def __iter__(self):
        return iter(self.exps)

    def __len__(self) -> int:
        return len(self.exps)

    def __getitem__(self, i):
        return self.exps[i]

    def __str__(self) -> str:
        return format_dim(self)

    def __repr__(self) -> str:
        return f"Dim({self.dim_class.name}, {list(self.exps)})"


def _same_class(d1: Dim, d2: Dim) -> DimClass:
    if d1.dim_class != d2.dim_class:
        raise ClassMismatch(f"dimension classes differ: {d1.dim_class.name} vs {d2.dim_class.name}")
    return d1.dim_class


def base_dim(dim_class: DimClass, symbol: str) -> Dim:
    i = dim_class.index(symbol)
    return Dim(dim_class, tuple(1 if j == i else 0 for j in range(dim_class.n)))


def dimless(dim_class: DimClass) -> Dim:
    return Dim(dim_class, (0,) * dim_class.n)


def times(d1: Dim, d2: Dim) -> Dim:
    cls = _same_class(d1, d2)
    return Dim(cls, tuple(a + b for a, b in zip(d1.exps, d2.exps)))


def over(d1: Dim, d2: Dim) -> Dim:
    cls = _same_class(d1, d2)
    return Dim(cls, tuple(a - b for a, b in zip(d1.exps, d2.exps)))


def power(d: Dim, k: int) -> Dim:
    """Raise ``d`` to the integer power ``k`` (scales every exponent by ``k``)."""
    if isinstance(k, bool) or int(k) != k:
        raise TypeError(f"dimension powers must be integers, got {k!r}")
    k = int(k)
    return Dim(d.dim_class, tuple(k * e for e in d.exps))


def prod_pows(ds: Sequence[Dim], ps: Sequence[int], dim_class: DimClass | None = None) -> Dim:
    """Product of ``ds[i] ** ps[i]``.

    The empty product is dimensionless; pass ``dim_class`` so it knows which
    class to return.
    """
    if len(ds) != len(ps):
        raise LengthMismatch(f"{len(ds)} dimensions but {len(ps)} exponents")
    if not ds:
        if dim_class is None:
            raise ValueError("prod_pows of an empty list needs dim_class")
        return dimless(dim_class)
    acc = dimless(dim_class or ds[0].dim_class)
    for d, p in zip(ds, ps):
        acc = times(acc, power(d, p))
    return acc


def is_dimless(d: Dim) -> bool:
    return all(e == 0 for e in d.exps)


def df(d: Dim, scales: Sequence[float]) -> float:
    """Evaluate the dimension function: ``prod(scales[i] ** d.exps[i])``.

    ``scales`` are per-base rescaling factors and must be positive and finite.
    """
    scales = list(scales)
    if len(scales) != d.dim_class.n:
        raise LengthMismatch(f"expected {d.dim_class.n} scales, got {len(scales)}")
    for s in scales:
        if not (math.isfinite(s) and s > 0):
            raise NonPositiveScale(f"scale factors must be positive and finite, got {s!r}")
    return math.prod(float(s) ** e for s, e in zip(scales, d.exps))


def dim_eq(d1: Dim, d2: Dim) -> bool:
    return d1.dim_class == d2.dim_class and d1.exps == d2.exps


def format_dim(d: Dim, aliases: dict[str, Dim] | None = None) -> str:
    """Render ``d`` by alias name when one matches, else as ``L^1·T^-2``."""
    if aliases:
        for name, a in aliases.items():
            if dim_eq(a, d):
                return name
    parts = [f"{b}^{e}" for b, e in zip(d.dim_class.bases, d.exps) if e != 0]
    return "·".join(parts) if parts else "1"


# The mechanics class, ordered to match the usual [L, T, M] vectors.
LTM = DimClass("LTM", ("L", "T", "M"))

DIMLESS = dimless(LTM)
LENGTH = base_dim(LTM, "L")
TIME = base_dim(LTM, "T")
MASS = base_dim(LTM, "M")
VELOCITY = LENGTH / TIME
ACCELERATION = VELOCITY / TIME
FORCE = MASS * ACCELERATION
WORK = FORCE * LENGTH
ENERGY = MASS * (VELOCITY * VELOCITY)
