import pytest
from hypothesis import given, strategies as st

from dimcheck.dimension import LTM, DimClass
from dimcheck.errors import ClassMismatch, DuplicateSystem, UnknownSystem
from dimcheck.units import CGS, MECHANICS, SI, UnitRegistry, UnitSystem, fs, register

# 1 m = 100 cm, 1 s = 1 s, 1 kg = 1000 g
SI_TO_CGS = (100.0, 1.0, 1000.0)


def test_fs_si_cgs():
    assert fs(MECHANICS, "SI", "CGS") == pytest.approx(SI_TO_CGS, rel=1e-15)
    assert fs(MECHANICS, "CGS", "SI") == pytest.approx((0.01, 1.0, 0.001), rel=1e-15)
    assert fs(MECHANICS, "CGS", "CGS") == (1.0, 1.0, 1.0)


def test_fs_unknown():
    with pytest.raises(UnknownSystem):
        fs(MECHANICS, "SI", "FPS")


def test_register():
    reg = UnitRegistry(LTM, SI)
    reg2 = register(reg, CGS)
    assert set(reg2) == {"SI", "CGS"}
    assert set(reg) == {"SI"}  # original untouched
    with pytest.raises(DuplicateSystem):
        reg2.register(UnitSystem("SI", LTM, (2, 2, 2)))
    heat = DimClass("Heat", ("L", "T", "M", "K"))
    with pytest.raises(ClassMismatch):
        reg.register(UnitSystem("X", heat, (1, 1, 1, 2)))


def test_single_reference():
    with pytest.raises(ValueError):
        MECHANICS.register(UnitSystem("MKS", LTM, (1, 1, 1)))
    assert MECHANICS.reference.name == "SI"


def test_registry_immutable():
    with pytest.raises(AttributeError):
        MECHANICS.reference_name = "CGS"


size = st.floats(min_value=1e-4, max_value=1e4)
sizes3 = st.tuples(size, size, size)


@st.composite
def registries(draw):
    reg = UnitRegistry(LTM, "R")
    for name in ("A", "B", "C"):
        s = draw(sizes3)
        if s == (1.0, 1.0, 1.0):
            s = (2.0, 1.0, 1.0)
        reg = reg.register(UnitSystem(name, LTM, s))
    return reg


@given(registries(), st.permutations(["R", "A", "B", "C"]))
def test_cocycle(reg, order):
    u, u2, u3 = order[:3]
    lhs = [a * b for a, b in zip(fs(reg, u, u2), fs(reg, u2, u3))]
    assert lhs == pytest.approx(fs(reg, u, u3), rel=1e-12)
    back = [a * b for a, b in zip(fs(reg, u, u2), fs(reg, u2, u))]
    assert back == pytest.approx([1.0] * 3, rel=1e-12)
    assert fs(reg, u, u) == (1.0, 1.0, 1.0)
