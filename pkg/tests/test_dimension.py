from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from dimcheck.dimension import (
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
from dimcheck.errors import ClassMismatch, LengthMismatch, NonPositiveScale, UnknownBase
from tests.strategies import dim_tuples, dims, scales

ONE = DimClass("One", ("X",))
HEAT = DimClass("Heat", ("L", "T", "M", "K"))


def test_base_dims():
    assert base_dim(LTM, "L").exps == (1, 0, 0)
    assert base_dim(LTM, "M").exps == (0, 0, 1)
    with pytest.raises(UnknownBase):
        base_dim(LTM, "X")


def test_dimless():
    assert dimless(LTM).exps == (0, 0, 0)
    assert dimless(ONE).exps == (0,)
    assert dimless(HEAT).exps == (0, 0, 0, 0)


def test_named_mechanics_dims():
    assert VELOCITY.exps == (1, -1, 0)
    assert ACCELERATION.exps == (1, -2, 0)
    assert FORCE.exps == (1, -2, 1)
    assert times(MASS, ACCELERATION) == FORCE


def test_times_over_pow():
    assert times(DIMLESS, FORCE) == FORCE
    assert times(LENGTH, LENGTH).exps == (2, 0, 0)
    assert over(LENGTH, TIME) == VELOCITY
    assert over(FORCE, FORCE) == DIMLESS
    assert over(DIMLESS, TIME).exps == (0, -1, 0)
    assert power(TIME, 2).exps == (0, 2, 0)
    assert power(FORCE, 0) == DIMLESS
    assert power(LENGTH, -1).exps == (-1, 0, 0)


def test_class_mismatch():
    with pytest.raises(ClassMismatch):
        times(LENGTH, base_dim(HEAT, "L"))
    with pytest.raises(ClassMismatch):
        over(LENGTH, base_dim(ONE, "X"))


def test_prod_pows():
    assert prod_pows([LENGTH, ACCELERATION], [1, -1]).exps == (0, 2, 0)
    assert prod_pows([], [], LTM) == DIMLESS
    assert prod_pows([FORCE], [1]) == FORCE
    with pytest.raises(LengthMismatch):
        prod_pows([LENGTH], [1, 2])


def test_is_dimless():
    assert is_dimless(DIMLESS)
    assert not is_dimless(VELOCITY)
    assert is_dimless(over(FORCE, FORCE))


def test_df_values():
    assert df(ENERGY, [1.0, 1.0, 1.0]) == 1.0
    assert df(VELOCITY, [2.0, 2.0, 2.0]) == 1.0
    # oracle: exact rational evaluation 2^1 * 3^-2 * 5^1
    expected = float(Fraction(2) * Fraction(1, 9) * Fraction(5))
    assert df(FORCE, [2.0, 3.0, 5.0]) == pytest.approx(expected, rel=1e-15)
    assert expected == pytest.approx(10 / 9)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
def test_df_rejects_bad_scales(bad):
    with pytest.raises(NonPositiveScale):
        df(FORCE, [1.0, bad, 1.0])


def test_dim_eq():
    assert dim_eq(ENERGY, WORK)
    assert not dim_eq(FORCE, ENERGY)
    assert dim_eq(FORCE, FORCE)
    assert not dim_eq(base_dim(HEAT, "L"), base_dim(LTM, "L"))


def test_dims_are_immutable():
    with pytest.raises(Exception):
        FORCE.exps = (0, 0, 0)


def test_rejects_fractional_exponent():
    with pytest.raises(TypeError):
        Dim(LTM, (0.5, 0, 0))
    with pytest.raises(LengthMismatch):
        Dim(LTM, (1, 0))


def test_dimclass_validation():
    with pytest.raises(ValueError):
        DimClass("Bad", ("L", "L"))
    with pytest.raises(ValueError):
        DimClass("Bad", ())
    with pytest.raises(ValueError):
        DimClass("Bad", ("",))


def test_format_dim():
    assert format_dim(FORCE) == "L^1·T^-2·M^1"
    assert format_dim(DIMLESS) == "1"
    assert format_dim(WORK, {"Energy": ENERGY}) == "Energy"


def test_big_exponents_do_not_wrap():
    d = power(LENGTH, 2**70)
    assert d.exps[0] == 2**70
    assert over(d, d) == DIMLESS


# group laws


@given(dim_tuples(3))
def test_abelian_group_laws(case):
    _, (d1, d2, d3) = case
    one = dimless(d1.dim_class)
    assert times(d1, d2) == times(d2, d1)
    assert times(times(d1, d2), d3) == times(d1, times(d2, d3))
    assert times(one, d1) == d1 == times(d1, one)
    assert times(over(one, d1), d1) == one
    assert times(d1, over(one, d1)) == one


@given(dim_tuples(3))
def test_no_prec(case):
    _, (d1, d2, d3) = case
    assert over(times(d1, d2), d3) == times(d1, over(d2, d3))


@given(dim_tuples(3), st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.integers(-7, 7))
def test_pow_prod_pows_agree(case, ps, k):
    cls, ds = case
    assert power(ds[0], k) == prod_pows([ds[0]], [k])
    folded = dimless(cls)
    for d, p in zip(ds, ps):
        folded = times(folded, power(d, p))
    assert prod_pows(ds, ps) == folded


@given(dim_tuples(2), st.data())
def test_df_homomorphism(case, data):
    cls, (d1, d2) = case
    s = data.draw(scales(cls.n))
    s2 = data.draw(scales(cls.n))
    assert df(times(d1, d2), s) == pytest.approx(df(d1, s) * df(d2, s), rel=1e-12)
    ratio = [a / b for a, b in zip(s, s2)]
    assert df(d1, ratio) == pytest.approx(df(d1, s) / df(d1, s2), rel=1e-12)
    assert df(d1, [1.0] * cls.n) == 1.0


@given(dim_tuples(2, lo=-2, hi=2))
def test_dim_eq_matches_componentwise(case):
    _, (d1, d2) = case
    assert dim_eq(d1, d2) == all(a == b for a, b in zip(d1.exps, d2.exps))
    assert dim_eq(d1, d1)


@given(dims())
def test_operator_sugar(d):
    assert d * FORCE == times(d, FORCE)
    assert d / FORCE == over(d, FORCE)
    assert d**3 == power(d, 3)
