"""dimcheck: exact dimensional analysis.

Dimensions are integer exponent vectors, quantities are unit-tagged reals,
dependence between dimensions is decided exactly, and Buckingham Pi groups
and scaling exponents are computed from that. A small model-file language
and CLI sit on top.
"""

__version__ = "0.1.0"

from .dimension import (
    ACCELERATION,
    DIMLESS,
    ENERGY,
    FORCE,
    LENGTH,
    LTM,
    MASS,
    TIME,
    VELOCITY,
    WORK,
    Dim,
    DimClass,
    base_dim,
    df,
    dim_eq,
    dimless,
    format_dim,
    is_dimless,
    over,
    power,
    prod_pows,
    times,
)
from .errors import *  # noqa: F401,F403
from .units import CGS, MECHANICS, SI, UnitRegistry, UnitSystem, fs, make_registry, register
from .quantity import (
    Quantity,
    add,
    deriv_dim,
    dim_of,
    div,
    is_dimless_q,
    is_judgment,
    measure,
    mul,
    q_pow,
    root,
    scalar_mul,
    sub,
    val,
)
from .lindep import DepEvidence, are_dep, are_indep, dim_make_dimless, find_dep, make_dimless, rank
from .pi import PiDecomposition, PiGroup, ScalingLaw, decompose, pi_groups, scaling_law, solve_exponents
