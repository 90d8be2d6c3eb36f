"""Expression language for the command line.

Grammar::

    expr    := term (op term)*          all ops equal precedence, left-assoc,
    op      := sh | tsh | st | tst | .   and mixing ops needs parentheses
    term    := func "(" args ")" | literal | "(" expr ")"
    literal := word over {x, y} | z(k1,...,kn) | 1

Functions: ``St(p, e)``, ``tau(e)``, ``del(n, e)``, ``delt(n, e)``,
``sigma(m, e)``, ``sigmabar(m, e)``, ``regsh(e)``, ``regst(e)``, ``regtsh(e)``,
``regtst(e)``. ``p`` is a polynomial in ``t`` with rational coefficients.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from ..algebra import DomainError, Element, product
from ..exactnum import T, TPoly
from ..maps import S_map, del_n, del_n_t, sigma_m_op, tau_dual
from ..regularize import reg

__all__ = [
    "ParseError",
    "Word",
    "Index",
    "Unit",
    "BinOp",
    "Func",
    "Expr",
    "parse",
    "parse_poly",
    "to_text",
    "check_domain",
    "evaluate",
    "run_expr",
    "Shape",
    "OPS",
    "FUNCS",
]


class ParseError(ValueError):
    """Syntax or static domain error; ``offset`` is a byte offset into the source."""

    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} at byte {offset}")
        self.msg = msg
        self.offset = offset


OPS = {"sh": "shuffle", "tsh": "tshuffle", "st": "stuffle", "tst": "tstuffle", ".": "concat"}

# name -> kind of leading argument (None: unary)
FUNCS = {
    "St": "poly",
    "tau": None,
    "del": "int",
    "delt": "int",
    "sigma": "int",
    "sigmabar": "int",
    "regsh": None,
    "regst": None,
    "regtsh": None,
    "regtst": None,
}
_REG = {"regsh": "shuffle", "regst": "stuffle", "regtsh": "tshuffle", "regtst": "tstuffle"}


@dataclass(frozen=True)
class Word:
    w: str


@dataclass(frozen=True)
class Index:
    k: Tuple[int, ...]


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Func:
    name: str
    arg: "Expr"
    param: Union[None, int, TPoly] = None
    offset: int = field(default=0, compare=False)


Expr = Union[Word, Index, Unit, BinOp, Func]


# -- polynomials in t ----------------------------------------------------------------

_POLY_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(t(?:\s*\^\s*(\d+))?)?\s*"
)


def parse_poly(src: str, base: int = 0) -> TPoly:
    """Parse ``1-2t``, ``1/2*t^2 + 3``, ``-t`` and the like."""
    s = src.replace("−", "-")
    pos, out, first = 0, {}, True
    if not s.strip():
        raise ParseError("empty polynomial", base)
    while pos < len(s):
        m = _POLY_TERM.match(s, pos)
        sign, num, var, exp = m.groups()
        if (num is None and var is None) or (sign is None and not first):
            raise ParseError("bad polynomial term", base + len(s[:pos].encode()))
        q = Fraction(num) if num else Fraction(1)
        if sign == "-":
            q = -q
        e = (int(exp) if exp else 1) if var else 0
        out[e] = out.get(e, 0) + q
        pos, first = m.end(), False
    return TPoly(out)


# -- tokenizer -----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z]+)|(\d+)|(.))")


def _tokens(src: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        off = len(src[:start].encode())
        if m.group(1):
            out.append(("name", m.group(1), off))
        elif m.group(2):
            out.append(("int", m.group(2), off))
        else:
            out.append(("sym", m.group(3), off))
        pos = m.end()
    out.append(("end", "", len(src.encode())))
    return out


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokens(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, value: Optional[str] = None):
        t = self.take()
        if t[0] != kind or (value is not None and t[1] != value):
            want = value or kind
            got = t[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", t[2])
        return t

    def op_at(self) -> Optional[Tuple[str, int]]:
        kind, val, off = self.peek()
        if (kind == "name" and val in OPS) or (kind == "sym" and val == "."):
            return val, off
        return None

    def expr(self) -> Expr:
        left = self.term()
        first_op = None
        while (op := self.op_at()) is not None:
            name, off = op
            if first_op is not None and name != first_op:
                raise ParseError(f"mixed operators {first_op!r} and {name!r} need parentheses", off)
            first_op = name
            self.take()
            left = BinOp(name, left, self.term(), off)
        return left

    def term(self) -> Expr:
        kind, val, off = self.take()
        if kind == "sym" and val == "(":
            e = self.expr()
            self.expect("sym", ")")
            return e
        if kind == "int" and val == "1":
            return Unit()
        if kind == "name":
            if val == "z":
                return self.index(off)
            if val in FUNCS:
                return self.func(val, off)
            if set(val) <= {"x", "y"}:
                return Word(val)
            raise ParseError(f"unknown name {val!r}", off)
        raise ParseError(f"unexpected {val or 'end of input'!r}", off)

    def index(self, off: int) -> Index:
        self.expect("sym", "(")
        parts = [int(self.expect("int")[1])]
        while self.peek()[:2] == ("sym", ","):
            self.take()
            parts.append(int(self.expect("int")[1]))
        self.expect("sym", ")")
        if min(parts) < 1:
            raise ParseError("index parts must be positive", off)
        return Index(tuple(parts))

    def func(self, name: str, off: int) -> Func:
        self.expect("sym", "(")
        kind = FUNCS[name]
        param = None
        if kind == "int":
            param = int(self.expect("int")[1])
            self.expect("sym", ",")
        elif kind == "poly":
            param = self.poly_until_comma()
        arg = self.expr()
        self.expect("sym", ")")
        return Func(name, arg, param, off)

    def poly_until_comma(self) -> TPoly:
        # polynomial text runs to the first top-level comma
        start = self.peek()[2]
        depth = 0
        while True:
            kind, val, off = self.peek()
            if kind == "end":
                raise ParseError("expected ',' after polynomial", off)
            if kind == "sym" and val == "," and depth == 0:
                break
            depth += (val == "(") - (val == ")") if kind == "sym" else 0
            self.take()
        end = self.peek()[2]
        raw = self.src.encode()[start:end].decode()
        self.take()
        return parse_poly(raw, start)


def parse(src: str) -> Expr:
    p = _Parser(src)
    e = p.expr()
    kind, val, off = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", off)
    return e


# -- canonical printer -----------------------------------------------------------------


def to_text(e: Expr) -> str:
    if isinstance(e, Word):
        return e.w
    if isinstance(e, Index):
        return "z(" + ",".join(map(str, e.k)) + ")"
    if isinstance(e, Unit):
        return "1"
    if isinstance(e, BinOp):
        left = to_text(e.left)
        if isinstance(e.left, BinOp) and e.left.op != e.op:
            left = f"({left})"
        right = to_text(e.right)
        if isinstance(e.right, BinOp):
            right = f"({right})"
        return f"{left} {e.op} {right}"
    if isinstance(e, Func):
        if e.param is None:
            return f"{e.name}({to_text(e.arg)})"
        p = e.param.compact() if isinstance(e.param, TPoly) else str(e.param)
        return f"{e.name}({p}, {to_text(e.arg)})"
    raise TypeError(f"not an expression: {e!r}")


# -- static domain check -------------------------------------------------------------
# Each node gets (starts_x, ends_y, no_unit): every word of the value starts with x,
# every word ends in y, the value has no constant term. The empty word counts for both.


@dataclass(frozen=True)
class Shape:
    starts_x: bool
    ends_y: bool
    no_unit: bool


def _word_shape(w: str) -> Shape:
    if not w:
        return Shape(True, True, False)
    return Shape(w[0] == "x", w[-1] == "y", True)


def check_domain(e: Expr) -> Shape:
    """Conservative shape of the value; raises ParseError where a map needs 𝔥¹ input."""
    if isinstance(e, Word):
        return _word_shape(e.w)
    if isinstance(e, Index):
        return Shape(e.k[0] >= 2, True, True)
    if isinstance(e, Unit):
        return Shape(True, True, False)
    if isinstance(e, BinOp):
        a, b = check_domain(e.left), check_domain(e.right)
        if e.op == ".":
            return Shape(
                a.starts_x and (a.no_unit or b.starts_x),
                b.ends_y and (b.no_unit or a.ends_y),
                a.no_unit or b.no_unit,
            )
        if e.op in ("st", "tst") and not (a.ends_y and b.ends_y):
            raise ParseError(f"{OPS[e.op]} needs operands ending in y", e.offset)
        return Shape(a.starts_x and b.starts_x, a.ends_y and b.ends_y, a.no_unit or b.no_unit)
    if isinstance(e, Func):
        a = check_domain(e.arg)
        if e.name == "tau":
            return Shape(a.ends_y, a.starts_x, a.no_unit)
        if e.name == "St":
            return a
        if e.name in ("del", "delt"):
            if e.param < 1:
                raise ParseError(f"{e.name} needs n >= 1", e.offset)
            return Shape(a.starts_x, a.ends_y, True)
        if e.name == "sigma":
            if not a.ends_y:
                raise ParseError("sigma needs an argument ending in y", e.offset)
            return Shape(a.starts_x, True, False)
        if e.name == "sigmabar":
            if not a.starts_x:
                raise ParseError("sigmabar needs an argument starting with x", e.offset)
            return Shape(True, a.ends_y, False)
        if e.name in _REG:
            if not a.ends_y:
                raise ParseError(f"{e.name} needs an argument ending in y", e.offset)
            return Shape(True, True, False)
    raise TypeError(f"not an expression: {e!r}")


# -- evaluation ------------------------------------------------------------------------


def evaluate(e: Expr) -> Element:
    if isinstance(e, Word):
        return Element.word(e.w)
    if isinstance(e, Index):
        return Element.z(*e.k)
    if isinstance(e, Unit):
        return Element.one()
    if isinstance(e, BinOp):
        return product(OPS[e.op], evaluate(e.left), evaluate(e.right))
    if isinstance(e, Func):
        a = evaluate(e.arg)
        if e.name == "St":
            return S_map(a, e.param)
        if e.name == "tau":
            return tau_dual(a)
        if e.name == "del":
            return del_n(a, e.param)
        if e.name == "delt":
            return del_n_t(a, e.param, T)
        if e.name == "sigma":
            return sigma_m_op(a, e.param)
        if e.name == "sigmabar":
            return sigma_m_op(a, e.param, barred=True)
        if e.name in _REG:
            return reg(a, _REG[e.name])
    raise TypeError(f"not an expression: {e!r}")


def run_expr(src: str) -> Element:
    """Parse, check and evaluate. Domain problems surface as ParseError before any work."""
    e = parse(src)
    check_domain(e)
    try:
        return evaluate(e)
    except DomainError as exc:  # the static check is conservative, so this is a bug signal
        raise ParseError(str(exc), 0) from exc
