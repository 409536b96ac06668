"""Independent oracles for the dependence/independence checks.

``brute_dep``/``brute_indep`` search a bounded integer box; ``fraction_rank``
is exact Gauss-Jordan over ``Fraction``. Neither shares code with lindep.
"""

import itertools
from fractions import Fraction

import numpy as np

P_MAX, PS_MAX, EXP_MAX = 6, 6, 3


def fraction_rank(rows):
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def _combos(k):
    grid = itertools.product(range(-PS_MAX, PS_MAX + 1), repeat=k)
    return np.array(list(grid), dtype=np.int64).reshape(-1, k)


def brute_dep(d, ds):
    """First (p, ps) in the box with d^p == prod ds_i^ps_i, else None."""
    k = len(ds)
    if k == 0:
        return (1, ()) if not any(d.exps) else None
    a = np.array([x.exps for x in ds], dtype=np.int64)
    target = np.array(d.exps, dtype=np.int64)
    combos = _combos(k)
    sums = combos @ a
    for p in range(1, P_MAX + 1):
        hit = np.flatnonzero((sums == p * target).all(axis=1))
        if hit.size:
            return p, tuple(int(v) for v in combos[hit[0]])
    return None


def brute_indep(ds):
    """True when no nonzero ps in the box makes prod ds_i^ps_i dimensionless."""
    k = len(ds)
    if k == 0:
        return True
    a = np.array([x.exps for x in ds], dtype=np.int64)
    combos = _combos(k)
    nonzero = combos.any(axis=1)
    return not ((combos @ a) == 0).all(axis=1)[nonzero].any()


def in_span(d, ds):
    rows = [x.exps for x in ds]
    return fraction_rank(rows + [d.exps]) == fraction_rank(rows)
