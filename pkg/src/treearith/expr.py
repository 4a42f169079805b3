"""Expression trees over tree literals and the arithmetic operators.

Text syntax::

    #k          tree with global rank k
    "110100"    tree given by its code (single or double quotes)
    1           the single-vertex tree
    ^E  _E      stretch, un-stretch
    -E          negation
    k^E         E stretched k times
    k*E         sum of k copies of E
    E**k        product of k copies of E
    + - * /     tree addition, subtraction, multiplication, division

Binding, tightest first: ``**``; prefix ``^ _ -`` and ``k^``; ``* /`` and
``k*``; ``+ -``.  Binary operators associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import arith
from .arith import SignedTree
from .core import ONE, CanonTree, DecodeError, decode, from_code
from .enumeration import unrank

__all__ = [
    "Add",
    "Div",
    "Expr",
    "Literal",
    "Mul",
    "Negate",
    "One",
    "ParseError",
    "Power",
    "ScalarMul",
    "Stretch",
    "StretchPow",
    "Sub",
    "Unstretch",
    "decompose",
    "evaluate",
    "parse_expr",
    "to_text",
]


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Literal:
    value: Union[int, str, CanonTree, SignedTree]


@dataclass(frozen=True)
class Add:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Stretch:
    arg: Expr


@dataclass(frozen=True)
class Unstretch:
    arg: Expr


@dataclass(frozen=True)
class Negate:
    arg: Expr


@dataclass(frozen=True)
class ScalarMul:
    k: int
    arg: Expr

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("scalar multiple needs k >= 1")


@dataclass(frozen=True)
class StretchPow:
    k: int
    arg: Expr

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("stretch power needs k >= 1")


@dataclass(frozen=True)
class Power:
    arg: Expr
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("power needs k >= 1")


Expr = Union[One, Literal, Add, Sub, Mul, Div, Stretch, Unstretch, Negate,
             ScalarMul, StretchPow, Power]

_BINARY = {Add: arith.add, Sub: arith.sub, Mul: arith.mul, Div: arith.div}
_UNARY = {Stretch: arith.stretch, Unstretch: arith.unstretch, Negate: arith.negate}


def _literal(value, cap: int | None) -> SignedTree:
    if isinstance(value, SignedTree):
        return value
    if isinstance(value, CanonTree):
        return SignedTree(value)
    if isinstance(value, int):
        return SignedTree(unrank(value, cap))
    return SignedTree(from_code(value))


def evaluate(e: Expr, cap: int | None = None) -> SignedTree:
    kind = type(e)
    if kind is One:
        return SignedTree(ONE)
    if kind is Literal:
        return _literal(e.value, cap)
    if kind in _BINARY:
        return _BINARY[kind](evaluate(e.left, cap), evaluate(e.right, cap))
    if kind in _UNARY:
        return _UNARY[kind](evaluate(e.arg, cap))
    if kind is ScalarMul:
        return arith.scalar_mul(e.k, evaluate(e.arg, cap))
    if kind is StretchPow:
        return arith.stretch_pow(e.k, evaluate(e.arg, cap))
    if kind is Power:
        return arith.power(evaluate(e.arg, cap), e.k)
    raise TypeError(f"not an expression: {e!r}")


def decompose(t: CanonTree) -> Expr:
    """Build ``t`` from the single vertex using only addition and stretch."""
    kids = t.children
    if not kids:
        return One()
    last = Stretch(decompose(kids[-1]))
    if len(kids) == 1:
        return last
    return Add(decompose(CanonTree._from_sorted(kids[:-1])), last)


# -- printing -----------------------------------------------------------------

_ATOMS = (One, Literal)
_SYMBOL = {Add: "+", Sub: "-", Mul: "*", Div: "/"}


def to_text(e: Expr) -> str:
    """Fully parenthesized text that :func:`parse_expr` reads back to ``e``."""

    def wrap(x: Expr) -> str:
        return to_text(x) if isinstance(x, _ATOMS) else f"({to_text(x)})"

    kind = type(e)
    if kind is One:
        return "1"
    if kind is Literal:
        v = e.value
        if isinstance(v, int):
            return f"#{v}"
        if isinstance(v, SignedTree):
            return f'"{v.tree.code}"' if v.sign > 0 else f'(-"{v.tree.code}")'
        return f'"{v if isinstance(v, str) else v.code}"'
    if kind in _SYMBOL:
        left = wrap(e.left)
        if left == "1" and kind in (Mul, Div):
            left = "(1)"  # bare "1*" would read as a scalar multiple
        return f"{left} {_SYMBOL[kind]} {wrap(e.right)}"
    if kind is Stretch:
        return "^" + wrap(e.arg)
    if kind is Unstretch:
        return "_" + wrap(e.arg)
    if kind is Negate:
        return "-" + wrap(e.arg)
    if kind is ScalarMul:
        return f"{e.k}*{wrap(e.arg)}"
    if kind is StretchPow:
        return f"{e.k}^{wrap(e.arg)}"
    if kind is Power:
        return f"{wrap(e.arg)}**{e.k}"
    raise TypeError(f"not an expression: {e!r}")


# -- parsing ------------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at column {position}")
        self.position = position


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<hash>\#\d+)
      | (?P<code>"[01\s]*"|'[01\s]*')
      | (?P<num>\d+)
      | (?P<op>\*\*|[-+*/^_()])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[col]!r}", col)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, ahead: int = 0):
        return self.toks[min(self.i + ahead, len(self.toks) - 1)]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at_op(self, *ops: str, ahead: int = 0) -> bool:
        kind, val, _ = self.peek(ahead)
        return kind == "op" and val in ops

    def expect(self, op: str):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> Expr:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.at_op("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expr:
        if self.peek()[0] == "num" and self.at_op("*", ahead=1):
            k = self._int(self.take())
            self.take()
            e: Expr = ScalarMul(k, self.unary())
        else:
            e = self.unary()
        while self.at_op("*", "/"):
            op = self.take()[1]
            rhs = self.unary()
            e = Mul(e, rhs) if op == "*" else Div(e, rhs)
        return e

    def unary(self) -> Expr:
        if self.at_op("^"):
            self.take()
            return Stretch(self.unary())
        if self.at_op("_"):
            self.take()
            return Unstretch(self.unary())
        if self.at_op("-"):
            self.take()
            return Negate(self.unary())
        if self.peek()[0] == "num" and self.at_op("^", ahead=1):
            k = self._int(self.take())
            self.take()
            return StretchPow(k, self.unary())
        return self.postfix()

    def postfix(self) -> Expr:
        e = self.primary()
        while self.at_op("**"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise ParseError("exponent must be a positive integer", tok[2])
            e = Power(e, self._int(tok))
        return e

    def primary(self) -> Expr:
        kind, val, pos = self.take()
        if kind == "hash":
            k = int(val[1:])
            if k < 1:
                raise ParseError("ranks start at #1", pos)
            return Literal(k)
        if kind == "code":
            bits = "".join(val[1:-1].split())
            try:
                decode(bits)
            except DecodeError as err:
                raise ParseError(f"bad tree code: {err}", pos + 1) from None
            return Literal(bits)
        if kind == "num":
            if val != "1":
                raise ParseError(f"bare integer {val} is not a tree (use #{val} for a rank)", pos)
            return One()
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"expected a tree, found {val or 'end of input'!r}", pos)

    @staticmethod
    def _int(tok) -> int:
        k = int(tok[1])
        if k < 1:
            raise ParseError("multiplier must be >= 1", tok[2])
        return k


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()
