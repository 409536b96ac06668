import pytest
from hypothesis import assume, given, strategies as st

from dimcheck.dimension import ACCELERATION, DIMLESS, FORCE, LENGTH
from dimcheck.errors import (
    DimensionMismatch,
    DivisionByZero,
    DuplicateName,
    ModelError,
    NegativeRadicand,
    NonIntegralRoot,
    ParseError,
    UndeclaredName,
)
from dimcheck.lang import check, eval_raw, evaluate, format_model, format_q_expr, infer_dim, parse, parse_file
from dimcheck.lang.nodes import (
    CheckStmt,
    ClassDecl,
    DBin,
    DName,
    DOne,
    DPow,
    PiQuery,
    QBin,
    QNeg,
    QNum,
    QPow,
    QRoot,
    QVar,
    SystemDecl,
    VarDecl,
)
from dimcheck.quantity import dim_of
from tests.helpers import MODELS, corpus_files, malformed_files

HEADER = "class LTM L T M\nsystem SI reference\nsystem CGS 0.01 1 0.001\n"

MECH = HEADER + """
dim Velocity = L / T
dim Acceleration = Velocity / T
dim Force = M * Acceleration
dim Work = Force * L
dim Energy = M * (Velocity * Velocity)
var x : L = 3 SI
var t : T = 2 SI
var m : M = 2 SI
var a : Acceleration = 3 SI
"""


def q(src, model):
    """Parse a quantity expression in the context of ``model``'s declarations."""
    m = parse(model + f"eq probe : 1 = {src}\n")
    return m.equations["probe"].expr, m


def test_parse_structure():
    m = parse(MECH + "check Energy == Work\npigroups m given x, t\n")
    assert m.items[0] == ClassDecl("LTM", ("L", "T", "M"))
    assert m.items[1] == SystemDecl("SI", None)
    assert m.items[2] == SystemDecl("CGS", (0.01, 1.0, 0.001))
    assert VarDecl("x", DName("L"), 3.0, "SI") in m.items
    assert m.items[-2] == CheckStmt(DName("Energy"), DName("Work"))
    assert m.items[-1] == PiQuery("m", ("x", "t"))
    assert m.dim_aliases["Force"] == FORCE
    assert m.vars["a"].dim == ACCELERATION


def test_precedence_and_associativity():
    e, _ = q("x / t / t", MECH)
    assert e == QBin("/", QBin("/", QVar("x"), QVar("t")), QVar("t"))
    e, _ = q("-x^2 + 2 * t", MECH)
    assert e == QBin("+", QNeg(QPow(QVar("x"), 2)), QBin("*", QNum(2.0), QVar("t")))
    e, _ = q("root(x * x, 2)", MECH)
    assert e == QRoot(QBin("*", QVar("x"), QVar("x")), 2)
    m = parse(HEADER + "dim A = L / T^2 * M\ndim B = 1 / T^-1\n")
    assert m.items[3].expr == DBin("*", DBin("/", DName("L"), DPow(DName("T"), 2)), DName("M"))
    assert m.items[4].expr == DBin("/", DOne(), DPow(DName("T"), -1))


def test_comments_and_blank_lines():
    m = parse("# c\n\nclass LTM L T M  # trailing\nsystem SI reference\n")
    assert len(m.items) == 2


def test_infer_dim():
    m = parse(MECH)
    e, _ = q("m * (x / (t * t))", MECH)
    assert infer_dim(e, m) == FORCE
    e, _ = q("(x + x) / x", MECH)
    assert infer_dim(e, m) == DIMLESS
    e, _ = q("2 * root(x * x, 2)", MECH)
    assert infer_dim(e, m) == LENGTH


def test_infer_dim_mismatch_has_span():
    src = MECH + "eq bad : L = x + t\n"
    m = parse(src)
    e = m.equations["bad"].expr
    with pytest.raises(DimensionMismatch) as exc:
        infer_dim(e, m)
    line, col, end = exc.value.span
    text = src.splitlines()[line - 1]
    assert text[col - 1:end - 1] == "x + t"
    with pytest.raises(NonIntegralRoot):
        infer_dim(q("root(x, 2)", MECH)[0], m)


def test_evaluate_and_raw():
    m = parse(MECH)
    e, _ = q("m * a", MECH)
    r = evaluate(e, m)
    assert r.value == 6.0 and r.dim == FORCE
    assert eval_raw(e, {"m": 2.0, "a": 3.0}) == 6.0
    assert eval_raw(q("x / t", MECH)[0], {"x": 1.0, "t": 0.0}) == float("inf")
    with pytest.raises(NegativeRadicand):
        eval_raw(QRoot(QVar("x"), 2), {"x": -1.0})
    with pytest.raises(DivisionByZero):
        evaluate(q("x / (t - t)", MECH)[0], m)


def test_check_reports():
    rep = check(parse_file(MODELS / "mechanics.dim"))
    assert rep.passed
    kinds = [e.kind for e in rep.entries]
    assert kinds.count("check") == 2 and kinds.count("eq") == 4 and kinds.count("raweq") == 2
    assert all(e.status == "info" for e in rep.entries if e.kind == "raweq")
    law = [e for e in rep.entries if e.kind == "pigroups"][0]
    assert law.message == "Fnet^1 = m^1 · a^1 · Φ()"

    rep = check(parse_file(MODELS / "force_energy.dim"))
    assert not rep.passed
    assert any(e.message == "Force != Energy" for e in rep.failures)


def test_check_pendulum_and_stommel():
    rep = check(parse_file(MODELS / "pendulum.dim"))
    assert rep.passed
    pg = [e for e in rep.entries if e.kind == "pigroups"][0]
    assert pg.message == "tau^2 = l^1 · g^-1 · Φ()"
    rep = check(parse_file(MODELS / "stommel.dim"))
    assert rep.passed
    pg = [e for e in rep.entries if e.kind == "pigroups"][0]
    assert pg.message == "Temp^1 = c^0 · Te^1 · Φ(d/c, T0/Te)"
    groups = pg.data["groups"]
    assert groups[0]["value"] == pytest.approx(0.25, rel=1e-12)
    assert groups[1]["value"] == pytest.approx(280 / 288, rel=1e-12)


def test_unreachable_query():
    rep = check(parse_file(MODELS / "unreachable.dim"))
    (e,) = rep.failures
    assert "unreachable base: M" in e.message


def test_eq_type_error_is_a_failure_not_an_abort():
    rep = check(parse(MECH + "eq bad : L = x + t\ncheck Energy == Work\n"))
    assert [e.status for e in rep.entries] == ["fail", "pass"]


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.name)
def test_round_trip(path):
    m = parse_file(path)
    text = format_model(m)
    m2 = parse(text)
    assert m2 == m
    assert format_model(m2) == text


@pytest.mark.parametrize("path", malformed_files(), ids=lambda p: p.name)
def test_malformed_corpus(path):
    with pytest.raises(ModelError) as exc:
        parse_file(path)
    err = exc.value
    lines = path.read_text().splitlines()
    assert 1 <= err.line <= len(lines)
    text = lines[err.line - 1]
    # the span points into the offending line (or just past its end)
    assert 1 <= err.col <= len(text) + 1
    assert err.end_col > err.col
    assert str(err).startswith(f"{err.line}:{err.col}: ")


def test_specific_malformed_errors():
    with pytest.raises(UndeclaredName):
        parse(HEADER + "var y : Z\n")
    with pytest.raises(DuplicateName):
        parse(HEADER + "var x : L\nvar x : T\n")
    with pytest.raises(ParseError, match="expected integer"):
        parse(HEADER + "dim H = L^0.5\n")
    with pytest.raises(ParseError):
        parse(HEADER + "var eq : L\n")
    with pytest.raises(ParseError):
        parse("class LTM L T M\nsystem CGS 0.01 1 0.001\n")
    with pytest.raises(UndeclaredName):
        parse(MECH + "eq e : L = x + nope\n")
    with pytest.raises(ParseError):
        parse(MECH + "eq e : L = root(x, 0)\n")


# generated expressions

VARS = ["x", "t", "m", "a"]


def q_exprs():
    leaf = st.one_of(
        st.sampled_from(VARS).map(QVar),
        st.integers(1, 9).map(lambda v: QNum(float(v))),
    )

    def extend(children):
        return st.one_of(
            st.tuples(st.sampled_from("+-*/"), children, children).map(lambda t: QBin(*t)),
            children.map(QNeg),
            st.tuples(children, st.integers(-3, 3)).map(lambda t: QPow(*t)),
            st.tuples(children, st.integers(1, 3)).map(lambda t: QRoot(*t)),
        )

    return st.recursive(leaf, extend, max_leaves=8)


@given(q_exprs())
def test_printer_parser_round_trip(e):
    parsed, _ = q(format_q_expr(e), MECH)
    assert parsed == e


MECH_MODEL = parse(MECH)


@given(q_exprs())
def test_infer_dim_agrees_with_evaluation(e):
    try:
        inferred = infer_dim(e, MECH_MODEL)
    except (DimensionMismatch, NonIntegralRoot) as exc:
        inferred = exc
    try:
        value = evaluate(e, MECH_MODEL)
    except (DivisionByZero, NegativeRadicand, OverflowError):
        assume(False)
    except (DimensionMismatch, NonIntegralRoot) as exc:
        assert type(inferred) is type(exc)
        return
    assert not isinstance(inferred, Exception)
    assert dim_of(value) == inferred
