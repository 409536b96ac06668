"""Buckingham Pi machinery: independent/dependent splits, exponents, Π-groups.

The unknown function of the dimensionless groups (``Φ``) is never evaluated;
a :class:`ScalingLaw` only records its argument list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .dimension import Dim, base_dim, dim_eq, format_dim
from .errors import DimMismatchWithDeclared, MissingValue, NotDependent, NotIndependentBasis
from .lindep import DepEvidence, are_indep, find_dep, make_dimless, rank, _shared_class
from .quantity import Quantity, measure

Named = tuple[str, Dim]


@dataclass(frozen=True)
class PiDecomposition:
    independent: tuple[Named, ...]
    dependent: tuple[tuple[str, Dim, DepEvidence], ...]
    target: tuple[str, Dim, DepEvidence] | None = None

    @property
    def independent_names(self) -> list[str]:
        return [n for n, _ in self.independent]

    @property
    def independent_dims(self) -> list[Dim]:
        return [d for _, d in self.independent]


@dataclass(frozen=True)
class PiGroup:
    """``numerator ** p / prod(name ** e for name, e in denominator_exponents)``."""

    numerator: str
    p: int
    denominator_exponents: tuple[tuple[str, int], ...]
    value: float | None = field(default=None, compare=False)

    def __str__(self) -> str:
        num = self.numerator if self.p == 1 else f"{self.numerator}^{self.p}"
        terms = [n if e == 1 else f"{n}^{e}" for n, e in self.denominator_exponents if e != 0]
        if not terms:
            return num
        if len(terms) == 1:
            return f"{num}/{terms[0]}"
        return f"{num}/({'·'.join(terms)})"

    def to_dict(self) -> dict:
        return {
            "group": str(self),
            "numerator": self.numerator,
            "p": self.p,
            "denominator_exponents": [[n, e] for n, e in self.denominator_exponents],
            "value": self.value,
        }


@dataclass(frozen=True)
class ScalingLaw:
    """``target ** p = prod(basis ** e) · Φ(phi_args)``."""

    target: str
    p: int
    basis_exponents: tuple[tuple[str, int], ...]
    phi_args: tuple[PiGroup, ...]

    def __str__(self) -> str:
        rhs = [f"{n}^{e}" for n, e in self.basis_exponents]
        rhs.append(f"Φ({', '.join(str(g) for g in self.phi_args)})")
        return f"{self.target}^{self.p} = {' · '.join(rhs)}"

    def to_dict(self) -> dict:
        return {
            "law": str(self),
            "target": self.target,
            "p": self.p,
            "basis_exponents": [[n, e] for n, e in self.basis_exponents],
            "phi_args": [g.to_dict() for g in self.phi_args],
        }


def decompose(quantities: Sequence[Named]) -> PiDecomposition:
    """Split named dimensions into an independent basis and dependents.

    Scans in the given order; an entry joins the basis when it raises the
    rank. Dependents carry evidence against the final basis.
    """
    _shared_class([d for _, d in quantities])
    basis: list[Named] = []
    rest: list[Named] = []
    for name, d in quantities:
        if rank([b for _, b in basis] + [d]) > len(basis):
            basis.append((name, d))
        else:
            rest.append((name, d))
    bdims = [d for _, d in basis]
    dependent = tuple((name, d, find_dep(d, bdims)) for name, d in rest)
    return PiDecomposition(tuple(basis), dependent)


def pi_groups(dec: PiDecomposition, values: Mapping[str, Quantity] | None = None) -> list[PiGroup]:
    """One Π-group per dependent entry, valued when ``values`` are supplied."""
    names = dec.independent_names
    if values is not None:
        for name, d in list(dec.independent) + [(n, d) for n, d, _ in dec.dependent]:
            if name not in values:
                raise MissingValue(f"no value for {name!r}")
            if not dim_eq(values[name].dim, d):
                raise DimMismatchWithDeclared(
                    f"value for {name!r} has dimension {format_dim(values[name].dim)}, "
                    f"declared {format_dim(d)}"
                )
    groups = []
    for name, _, ev in dec.dependent:
        value = None
        if values is not None:
            q = make_dimless(values[name], [values[n] for n in names], ev)
            value = measure(q, q.registry.reference_name)
        groups.append(PiGroup(name, ev.p, tuple(zip(names, ev.ps)), value))
    return groups


def unreachable_bases(target: Dim, basis: Sequence[Dim]) -> tuple[str, ...]:
    """Smallest set of base symbols whose addition puts ``target`` in the span.

    Candidates are the base directions missing from the span of ``basis``;
    the first minimal subset in declaration order wins.
    """
    cls = target.dim_class
    basis = list(basis)
    missing = [b for b in cls.bases if find_dep(base_dim(cls, b), basis) is None]
    for size in range(1, len(missing) + 1):
        for combo in itertools.combinations(missing, size):
            extended = basis + [base_dim(cls, b) for b in combo]
            if find_dep(target, extended) is not None:
                return combo
    return tuple(missing)


def solve_exponents(target: Dim, basis: Sequence[Dim]) -> DepEvidence:
    """Canonical ``(p, ps)`` with ``target ** p == prod(basis ** ps)``."""
    if not are_indep(basis):
        raise NotIndependentBasis("basis dimensions are not independent")
    ev = find_dep(target, basis)
    if ev is None:
        missing = unreachable_bases(target, basis)
        raise NotDependent(
            f"{format_dim(target)} is not a product of powers of the basis; "
            f"unreachable base: {', '.join(missing)}",
            missing,
        )
    return ev


def scaling_law(
    target: Named,
    governing: Sequence[Named],
    values: Mapping[str, Quantity] | None = None,
) -> ScalingLaw:
    name, tdim = target
    _shared_class([d for _, d in governing], tdim)
    dec = decompose(governing)
    ev = solve_exponents(tdim, dec.independent_dims)
    return ScalingLaw(
        name,
        ev.p,
        tuple(zip(dec.independent_names, ev.ps)),
        tuple(pi_groups(dec, values)),
    )


def with_target(dec: PiDecomposition, target: Named) -> PiDecomposition:
    name, tdim = target
    ev = solve_exponents(tdim, dec.independent_dims)
    return PiDecomposition(dec.independent, dec.dependent, (name, tdim, ev))
