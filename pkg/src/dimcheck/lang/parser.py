"""Line-oriented parser for model files.

One declaration or statement per line, ``#`` starts a comment::

    class LTM L T M
    system SI reference
    system CGS 0.01 1 0.001
    dim V = L / T
    var x : L = 3 SI
    check M*V^2 == M*(V/T)*L
    eq F : M*L/T^2 = m * a
    raweq F2 : M*L/T^2 = m * a
    pigroups tau given l, g

Names are resolved while parsing, so every reference must follow its
declaration.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..dimension import Dim, DimClass, base_dim, dimless, over, power, times
from ..errors import ParseError, UndeclaredName, DuplicateName
from ..units import UnitRegistry, UnitSystem
from .model import Model, VarInfo
from .nodes import (
    CheckStmt,
    ClassDecl,
    DBin,
    DimDecl,
    DName,
    DOne,
    DPow,
    EqStmt,
    PiQuery,
    QBin,
    QNeg,
    QNum,
    QPow,
    QRoot,
    QVar,
    RawEqStmt,
    SystemDecl,
    VarDecl,
)

KEYWORDS = {"class", "system", "dim", "var", "check", "eq", "raweq", "pigroups"}
RESERVED = KEYWORDS | {"reference", "given", "auto", "root"}

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>==|[*/^+\-(),:=])
    """,
    re.VERBOSE,
)

_BINARY_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


@dataclass(frozen=True)
class Token:
    kind: str  # number | ident | op | eol
    text: str
    line: int
    col: int

    @property
    def end(self) -> int:
        return self.col + max(len(self.text), 1)

    @property
    def span(self):
        return (self.line, self.col, self.end)


def tokenize_line(text: str, lineno: int) -> list[Token]:
    text = text.split("#", 1)[0]
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", lineno, pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(Token(kind, m.group(), lineno, pos + 1))
        pos = m.end()
    toks.append(Token("eol", "", lineno, len(text.rstrip()) + 1))
    return toks


def _describe(tok: Token) -> str:
    return "end of line" if tok.kind == "eol" else repr(tok.text)


class _LineParser:
    def __init__(self, tokens: list[Token], state: "_State"):
        self.toks = tokens
        self.i = 0
        self.st = state

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "eol":
            self.i += 1
        return t

    def error(self, message: str, expected: str | None = None, tok: Token | None = None):
        t = tok or self.tok
        return ParseError(f"{message}, found {_describe(t)}", t.line, t.col, t.end, expected)

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "ident") and self.tok.text == text

    def expect_op(self, text: str) -> Token:
        if not (self.tok.kind == "op" and self.tok.text == text):
            raise self.error("syntax error", f"'{text}'")
        return self.advance()

    def expect_ident(self, what: str = "identifier") -> Token:
        if self.tok.kind != "ident":
            raise self.error("syntax error", what)
        return self.advance()

    def expect_word(self, word: str) -> Token:
        if not (self.tok.kind == "ident" and self.tok.text == word):
            raise self.error("syntax error", f"'{word}'")
        return self.advance()

    def expect_eol(self) -> None:
        if self.tok.kind != "eol":
            raise self.error("unexpected trailing input", "end of line")

    def new_name(self, what: str) -> Token:
        t = self.expect_ident(f"{what} name")
        if t.text in RESERVED:
            raise ParseError(f"{t.text!r} is a reserved word", t.line, t.col, t.end)
        return t

    def number(self) -> tuple[float, Token]:
        neg = False
        first = self.tok
        if self.tok.kind == "op" and self.tok.text == "-":
            neg = True
            self.advance()
        if self.tok.kind != "number":
            raise self.error("syntax error", "number")
        t = self.advance()
        v = float(t.text)
        return (-v if neg else v), first

    def integer(self) -> int:
        sign = 1
        if self.tok.kind == "op" and self.tok.text in ("+", "-"):
            sign = -1 if self.tok.text == "-" else 1
            self.advance()
        if self.tok.kind != "number" or not self.tok.text.isdigit():
            raise self.error("syntax error", "integer")
        return sign * int(self.advance().text)

    # dimension expressions

    def dim_expr(self):
        left = self.dim_factor()
        while self.tok.kind == "op" and self.tok.text in ("*", "/"):
            op = self.advance()
            right = self.dim_factor()
            left = DBin(op.text, left, right, _join(left.span, right.span))
        return left

    def dim_factor(self):
        base = self.dim_primary()
        if self.at("^"):
            self.advance()
            start = self.tok
            k = self.integer()
            base = DPow(base, k, _join(base.span, (start.line, start.col, self.toks[self.i - 1].end)))
        return base

    def dim_primary(self):
        t = self.tok
        if t.kind == "ident":
            self.advance()
            if t.text not in self.st.dim_names():
                raise UndeclaredName(f"undeclared dimension {t.text!r}", t.line, t.col, t.end)
            return DName(t.text, t.span)
        if t.kind == "number" and t.text == "1":
            self.advance()
            return DOne(t.span)
        if t.kind == "op" and t.text == "(":
            self.advance()
            e = self.dim_expr()
            close = self.expect_op(")")
            return _respan(e, (t.line, t.col, close.end))
        raise self.error("syntax error", "dimension name, '1' or '('")

    # quantity expressions

    def q_expr(self, min_prec: int = 1):
        left = self.q_unary()
        while self.tok.kind == "op" and _BINARY_PREC.get(self.tok.text, 0) >= min_prec:
            op = self.advance()
            right = self.q_expr(_BINARY_PREC[op.text] + 1)
            left = QBin(op.text, left, right, _join(left.span, right.span))
        return left

    def q_unary(self):
        if self.at("-"):
            t = self.advance()
            operand = self.q_unary()
            return QNeg(operand, _join(t.span, operand.span))
        return self.q_postfix()

    def q_postfix(self):
        base = self.q_atom()
        if self.at("^"):
            self.advance()
            start = self.tok
            k = self.integer()
            base = QPow(base, k, _join(base.span, (start.line, start.col, self.toks[self.i - 1].end)))
        return base

    def q_atom(self):
        t = self.tok
        if t.kind == "number":
            self.advance()
            return QNum(float(t.text), t.span)
        if t.kind == "ident" and t.text == "root":
            self.advance()
            self.expect_op("(")
            e = self.q_expr()
            self.expect_op(",")
            kt = self.tok
            k = self.integer()
            if k < 1:
                raise ParseError("root order must be a positive integer", kt.line, kt.col, kt.end)
            close = self.expect_op(")")
            return QRoot(e, k, (t.line, t.col, close.end))
        if t.kind == "ident":
            self.advance()
            if t.text not in self.st.vars:
                raise UndeclaredName(f"undeclared variable {t.text!r}", t.line, t.col, t.end)
            return QVar(t.text, t.span)
        if t.kind == "op" and t.text == "(":
            self.advance()
            e = self.q_expr()
            close = self.expect_op(")")
            return _respan(e, (t.line, t.col, close.end))
        raise self.error("syntax error", "variable, number, 'root' or '('")


def _join(a, b):
    if a is None or b is None:
        return a or b
    return (a[0], a[1], b[2])


def _respan(node, span):
    # widen a node's span to include surrounding parentheses
    return type(node)(**{**node.__dict__, "span": span})


class _State:
    def __init__(self):
        self.items = []
        self.dim_class: DimClass | None = None
        self.registry: UnitRegistry | None = None
        self.aliases: dict[str, Dim] = {}
        self.vars: dict[str, VarInfo] = {}
        self.equations = {}

    def dim_names(self):
        bases = self.dim_class.bases if self.dim_class else ()
        return set(bases) | set(self.aliases)

    def resolve_dim(self, e) -> Dim:
        return resolve_dim_expr(e, self.dim_class, self.aliases)


def resolve_dim_expr(e, dim_class: DimClass, aliases: dict[str, Dim]) -> Dim:
    """Evaluate a dimension expression against base symbols and aliases."""
    if isinstance(e, DName):
        if e.name in aliases:
            return aliases[e.name]
        return base_dim(dim_class, e.name)
    if isinstance(e, DOne):
        return dimless(dim_class)
    if isinstance(e, DPow):
        return power(resolve_dim_expr(e.base, dim_class, aliases), e.exp)
    if isinstance(e, DBin):
        l = resolve_dim_expr(e.left, dim_class, aliases)
        r = resolve_dim_expr(e.right, dim_class, aliases)
        return times(l, r) if e.op == "*" else over(l, r)
    raise TypeError(f"not a dimension expression: {e!r}")


def _parse_line(p: _LineParser, st: _State, lineno: int):
    kw = p.tok
    if kw.kind != "ident" or kw.text not in KEYWORDS:
        raise p.error("unknown statement", "one of " + ", ".join(sorted(KEYWORDS)))
    p.advance()
    if kw.text == "class":
        if st.dim_class is not None:
            raise ParseError("only one class declaration is allowed", kw.line, kw.col, kw.end)
        name = p.new_name("class")
        bases = []
        while p.tok.kind == "ident":
            t = p.new_name("base")
            if t.text in bases:
                raise DuplicateName(f"duplicate base {t.text!r}", t.line, t.col, t.end)
            bases.append(t.text)
        if not bases:
            raise p.error("syntax error", "base dimension symbol")
        p.expect_eol()
        st.dim_class = DimClass(name.text, tuple(bases))
        return ClassDecl(name.text, tuple(bases), lineno)

    if st.dim_class is None:
        raise ParseError("a class declaration must come first", kw.line, kw.col, kw.end, "'class'")

    if kw.text == "system":
        name = p.new_name("system")
        if st.registry is not None and name.text in st.registry:
            raise DuplicateName(f"duplicate system {name.text!r}", name.line, name.col, name.end)
        if p.at("reference"):
            p.advance()
            p.expect_eol()
            if st.registry is not None:
                raise ParseError("only one reference system is allowed", kw.line, kw.col, kw.end)
            st.registry = UnitRegistry(st.dim_class, name.text)
            return SystemDecl(name.text, None, lineno)
        if st.registry is None:
            raise ParseError(
                "the reference system must be declared before other systems",
                name.line, name.col, name.end,
            )
        sizes = []
        n = st.dim_class.n
        for _ in range(n):
            v, t = p.number()
            if not v > 0:
                raise ParseError("unit sizes must be positive", t.line, t.col, p.toks[p.i - 1].end)
            sizes.append(v)
        if p.tok.kind != "eol":
            raise p.error(f"system needs exactly {n} sizes", "end of line")
        try:
            st.registry = st.registry.register(UnitSystem(name.text, st.dim_class, tuple(sizes)))
        except ValueError as exc:
            raise ParseError(str(exc), name.line, name.col, name.end) from None
        return SystemDecl(name.text, tuple(sizes), lineno)

    if kw.text == "dim":
        name = p.new_name("dimension")
        if name.text in st.dim_names():
            raise DuplicateName(f"duplicate dimension name {name.text!r}", name.line, name.col, name.end)
        p.expect_op("=")
        e = p.dim_expr()
        p.expect_eol()
        st.aliases[name.text] = st.resolve_dim(e)
        return DimDecl(name.text, e, lineno)

    if kw.text == "var":
        name = p.new_name("variable")
        if name.text in st.vars:
            raise DuplicateName(f"duplicate variable {name.text!r}", name.line, name.col, name.end)
        p.expect_op(":")
        e = p.dim_expr()
        value = system = None
        if p.at("="):
            p.advance()
            value, _ = p.number()
            sys_tok = p.expect_ident("unit system name")
            if st.registry is None or sys_tok.text not in st.registry:
                raise UndeclaredName(
                    f"undeclared system {sys_tok.text!r}", sys_tok.line, sys_tok.col, sys_tok.end
                )
            system = sys_tok.text
        p.expect_eol()
        st.vars[name.text] = VarInfo(st.resolve_dim(e), value, system)
        return VarDecl(name.text, e, value, system, lineno)

    if kw.text == "check":
        lhs = p.dim_expr()
        p.expect_op("==")
        rhs = p.dim_expr()
        p.expect_eol()
        return CheckStmt(lhs, rhs, lineno)

    if kw.text in ("eq", "raweq"):
        name = p.new_name("equation")
        if name.text in st.equations:
            raise DuplicateName(f"duplicate equation {name.text!r}", name.line, name.col, name.end)
        p.expect_op(":")
        d = p.dim_expr()
        p.expect_op("=")
        e = p.q_expr()
        p.expect_eol()
        cls = EqStmt if kw.text == "eq" else RawEqStmt
        stmt = cls(name.text, d, e, lineno)
        st.equations[name.text] = stmt
        return stmt

    # pigroups
    target = None
    if p.at("auto"):
        p.advance()
        p.expect_eol()
        return PiQuery(None, None, lineno)
    t = p.expect_ident("target variable or 'auto'")
    if t.text not in st.vars:
        raise UndeclaredName(f"undeclared variable {t.text!r}", t.line, t.col, t.end)
    target = t.text
    if p.at("auto"):
        p.advance()
        p.expect_eol()
        return PiQuery(target, None, lineno)
    p.expect_word("given")
    given = []
    while True:
        g = p.expect_ident("variable name")
        if g.text not in st.vars:
            raise UndeclaredName(f"undeclared variable {g.text!r}", g.line, g.col, g.end)
        given.append(g.text)
        if not p.at(","):
            break
        p.advance()
    p.expect_eol()
    return PiQuery(target, tuple(given), lineno)


def parse(text: str) -> Model:
    """Parse model source text into a :class:`Model`."""
    st = _State()
    last = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last = lineno
        toks = tokenize_line(raw, lineno)
        if toks[0].kind == "eol":
            continue
        st.items.append(_parse_line(_LineParser(toks, st), st, lineno))
    if st.dim_class is None:
        raise ParseError("missing class declaration", last, 1, None, "'class'")
    if st.registry is None:
        raise ParseError("missing reference system", last, 1, None, "'system <Name> reference'")
    return Model(st.items, st.dim_class, st.registry, st.aliases, st.vars, st.equations)


def parse_file(path) -> Model:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
