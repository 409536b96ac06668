"""Numerical test of whether a raw numeric relationship commutes with unit changes.

For a raw equation ``f`` with declared output dimension ``D`` each trial
draws a random unit system ``u'`` and compares

* ``f`` applied to the measures of its variables in ``u'``, with
* ``df(D, fs(ref, u'))`` times ``f`` applied to the measures in the reference.

A relationship that respects the covariance principle gives equal numbers for
every ``u'``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .dimension import df
from .errors import DimcheckError, MissingValue, UnknownEquation
from .lang.checker import eval_raw, resolve_dim
from .lang.model import Model
from .lang.nodes import QBin, QNeg, QPow, QRoot, QVar, RawEqStmt
from .quantity import measure
from .units import UnitSystem, fs

LOG_SIZE_RANGE = (math.log(0.1), math.log(10.0))
ABS_FALLBACK = 1e-300
TRIAL_SYSTEM = "__trial__"


@dataclass(frozen=True)
class CovarianceReport:
    equation: str
    trials: int
    failures: int
    max_rel_error: float
    seed: int
    tol: float
    first_failure: int | None = None

    @property
    def verdict(self) -> str:
        return "pass" if self.failures == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict
        if not math.isfinite(d["max_rel_error"]):
            d["max_rel_error"] = str(d["max_rel_error"])
        return d


def _var_names(expr, out=None) -> list[str]:
    out = [] if out is None else out
    if isinstance(expr, QVar):
        if expr.name not in out:
            out.append(expr.name)
    elif isinstance(expr, QBin):
        _var_names(expr.left, out)
        _var_names(expr.right, out)
    elif isinstance(expr, (QNeg, QRoot)):
        _var_names(expr.operand, out)
    elif isinstance(expr, QPow):
        _var_names(expr.base, out)
    return out


def trial_sizes(seed: int, trial: int, n: int) -> np.ndarray:
    """Base-unit sizes for one trial, log-uniform in [0.1, 10].

    Each trial has its own stream keyed on ``(seed, trial)`` so trials can
    be evaluated in any order.
    """
    rng = np.random.default_rng([seed, trial])
    return np.exp(rng.uniform(*LOG_SIZE_RANGE, size=n))


def _rel_error(lhs: float, rhs: float) -> float:
    if not (math.isfinite(lhs) and math.isfinite(rhs)):
        return 0.0 if lhs == rhs else math.inf
    if abs(rhs) < ABS_FALLBACK:
        return abs(lhs - rhs)
    return abs(lhs - rhs) / abs(rhs)


def check_covariance(
    model: Model,
    raweq_name: str,
    trials: int = 100,
    tol: float = 1e-9,
    seed: int = 42,
) -> CovarianceReport:
    stmt = model.equations.get(raweq_name)
    if not isinstance(stmt, RawEqStmt):
        raise UnknownEquation(f"no raw equation named {raweq_name!r}")
    if not tol > 0:
        raise ValueError("tol must be positive")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    names = _var_names(stmt.expr)
    for n in names:
        if model.vars[n].value is None:
            raise MissingValue(f"variable {n!r} used by {raweq_name!r} has no value")

    declared = resolve_dim(stmt.dim, model)
    ref = model.registry.reference_name
    quantities = {n: model.quantity(n) for n in names}
    ref_measures = {n: measure(q, ref) for n, q in quantities.items()}
    f_ref = eval_raw(stmt.expr, ref_measures)

    failures = 0
    first = None
    worst = 0.0
    for t in range(trials):
        sizes = trial_sizes(seed, t, model.dim_class.n)
        reg = model.registry.register(UnitSystem(TRIAL_SYSTEM, model.dim_class, tuple(sizes)))
        trial_measures = {}
        for n, q in quantities.items():
            trial_measures[n] = q.value * df(q.dim, fs(reg, q.system, TRIAL_SYSTEM))
        try:
            lhs = eval_raw(stmt.expr, trial_measures)
        except DimcheckError:
            lhs = math.nan
        rhs = df(declared, fs(reg, ref, TRIAL_SYSTEM)) * f_ref
        err = _rel_error(lhs, rhs)
        if math.isnan(err):
            err = math.inf
        worst = max(worst, err)
        if err > tol:
            failures += 1
            if first is None:
                first = t
    return CovarianceReport(raweq_name, trials, failures, worst, seed, tol, first)
