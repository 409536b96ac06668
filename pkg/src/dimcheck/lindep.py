"""Exact dimensional dependence and independence.

Dimensions are integer vectors, so deciding whether ``d`` is a product of
powers of ``ds`` is a linear system over the rationals. Everything here is
computed exactly with fraction-free (Bareiss) elimination over Python ints;
rationals appear only in back substitution, via :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dimension import Dim, DimClass, dim_eq, dimless, over, power, prod_pows
from .errors import ClassMismatch, InvalidEvidence
from .quantity import Quantity, div, dim_of, q_pow

__all__ = [
    "DepEvidence",
    "bareiss_echelon",
    "rank",
    "are_indep",
    "find_dep",
    "are_dep",
    "dim_make_dimless",
    "make_dimless",
    "prod_pows_q",
]


@dataclass(frozen=True)
class DepEvidence:
    """Witness ``(p, ps)`` that ``d ** p == prod(ds[i] ** ps[i])``, with ``p != 0``."""

    p: int
    ps: tuple[int, ...]

    def __post_init__(self):
        if self.p == 0:
            raise ValueError("dependence evidence needs a nonzero power p")
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "ps", tuple(int(x) for x in self.ps))

    def witnesses(self, d: Dim, ds: Sequence[Dim]) -> bool:
        if len(self.ps) != len(ds):
            return False
        return dim_eq(power(d, self.p), prod_pows(ds, self.ps, d.dim_class))

    @property
    def is_canonical(self) -> bool:
        if self.p <= 0:
            return False
        if not any(self.ps):
            return self.p == 1
        return math.gcd(self.p, *self.ps) == 1


def _shared_class(dims: Sequence[Dim], extra: Dim | None = None) -> DimClass | None:
    all_dims = list(dims) + ([extra] if extra is not None else [])
    if not all_dims:
        return None
    cls = all_dims[0].dim_class
    for d in all_dims[1:]:
        if d.dim_class != cls:
            raise ClassMismatch(f"dimension classes differ: {cls.name} vs {d.dim_class.name}")
    return cls


def bareiss_echelon(matrix: Sequence[Sequence[int]], ncols: int | None = None):
    """Fraction-free row echelon form of an integer matrix.

    Pivots are searched only in the first ``ncols`` columns (all columns by
    default), which lets callers eliminate an augmented system without
    pivoting on the right-hand side.

    Returns ``(rows, pivots)`` where ``rows`` is the echelon matrix as lists
    of ints and ``pivots`` the column index of each pivot row in order.
    """
    m = [list(map(int, row)) for row in matrix]
    if not m:
        return m, []
    nrows, width = len(m), len(m[0])
    ncols = width if ncols is None else ncols
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        a = m[r][c]
        for i in range(r + 1, nrows):
            b = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, width):
                # exact: every entry stays a minor of the input
                row_i[j] = (a * row_i[j] - b * row_r[j]) // prev
            row_i[c] = 0
        # rows above r are untouched; rows below were scaled by a/prev
        prev = a
        pivots.append(c)
        r += 1
    return m, pivots


def rank(ds: Sequence[Dim]) -> int:
    """Rank over the rationals of the exponent matrix whose rows are ``ds``."""
    _shared_class(ds)
    if not ds:
        return 0
    _, pivots = bareiss_echelon([d.exps for d in ds])
    return len(pivots)


def are_indep(ds: Sequence[Dim]) -> bool:
    return rank(ds) == len(ds)


def _solve_rational(d: Dim, ds: Sequence[Dim]) -> list[Fraction] | None:
    """Rational ``x`` with ``sum(x[i] * ds[i]) == d``, free unknowns set to 0."""
    k = len(ds)
    n = d.dim_class.n
    # one equation per base dimension, one unknown per element of ds
    aug = [[ds[i].exps[j] for i in range(k)] + [d.exps[j]] for j in range(n)]
    rows, pivots = bareiss_echelon(aug, ncols=k)
    for row in rows[len(pivots):]:
        if row[k] != 0:
            return None
    x = [Fraction(0)] * k
    for r in reversed(range(len(pivots))):
        c = pivots[r]
        row = rows[r]
        s = Fraction(row[k])
        for j in pivots[r + 1:]:
            s -= row[j] * x[j]
        x[c] = s / row[c]
    return x


def find_dep(d: Dim, ds: Sequence[Dim]) -> DepEvidence | None:
    """Canonical integer evidence that ``d`` depends on ``ds``, or ``None``.

    The rational solution is cleared of denominators by their lcm, which
    gives ``p > 0`` with ``gcd(p, *ps) == 1``.
    """
    _shared_class(ds, d)
    x = _solve_rational(d, ds)
    if x is None:
        return None
    p = math.lcm(1, *(xi.denominator for xi in x))
    ps = tuple(int(xi * p) for xi in x)
    return DepEvidence(p, ps)


def are_dep(ds2: Sequence[Dim], ds: Sequence[Dim]) -> list[DepEvidence] | None:
    out = []
    for d in ds2:
        e = find_dep(d, ds)
        if e is None:
            return None
        out.append(e)
    return out


def dim_make_dimless(d: Dim, ds: Sequence[Dim], e: DepEvidence) -> Dim:
    if len(e.ps) != len(ds):
        raise InvalidEvidence(f"evidence has {len(e.ps)} exponents for {len(ds)} dimensions")
    _shared_class(ds, d)
    result = over(power(d, e.p), prod_pows(ds, e.ps, d.dim_class))
    if not dim_eq(result, dimless(d.dim_class)):
        raise InvalidEvidence(f"evidence (p={e.p}, ps={list(e.ps)}) does not witness the dependence")
    return result


def prod_pows_q(qs: Sequence[Quantity], ps: Sequence[int], like: Quantity) -> Quantity:
    """Product of ``qs[i] ** ps[i]``; the empty product is ``1`` in ``like``'s system."""
    acc = Quantity(1.0, dimless(like.dim.dim_class), like.system, like.registry)
    for q, p in zip(qs, ps):
        acc = acc * q_pow(q, p)
    return acc


def make_dimless(q: Quantity, qs: Sequence[Quantity], e: DepEvidence) -> Quantity:
    """``q ** p / prod(qs[i] ** ps[i])``, a dimensionless quantity."""
    dim_make_dimless(dim_of(q), [dim_of(x) for x in qs], e)
    return div(q_pow(q, e.p), prod_pows_q(qs, e.ps, q))
