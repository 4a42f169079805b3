"""Tree arithmetic: addition, multiplication, stretch, their inverses, signs.

A :class:`SignedTree` is a canonical tree plus one sign shared by all
non-root vertices.  Addition merges roots; opposite-sign root subtrees of
identical shape cancel.  Multiplication ``A * B`` hangs a copy of every
root subtree of ``B`` under every vertex of ``A``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence, Union

from .core import ONE, CanonTree

__all__ = [
    "DivisionUndefined",
    "InvalidPath",
    "SignedTree",
    "SubtractionUndefined",
    "UndefinedOperation",
    "UnstretchUndefined",
    "add",
    "commutes",
    "div",
    "graft",
    "mul",
    "negate",
    "power",
    "prune",
    "prune_at",
    "scalar_mul",
    "signed",
    "stretch",
    "stretch_pow",
    "sub",
    "subtree_at",
    "unstretch",
]


class UndefinedOperation(ArithmeticError):
    """An inverse operation (or mixed-sign addition) has no tree result."""


class SubtractionUndefined(UndefinedOperation):
    pass


class DivisionUndefined(UndefinedOperation):
    pass


class UnstretchUndefined(UndefinedOperation):
    pass


class InvalidPath(ValueError):
    pass


@dataclass(frozen=True)
class SignedTree:
    tree: CanonTree
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.tree.size == 1 and self.sign == -1:
            # 1 = -1: the single vertex is neutral
            object.__setattr__(self, "sign", 1)

    @property
    def size(self) -> int:
        return self.tree.size

    @property
    def is_one(self) -> bool:
        return self.tree.size == 1

    @property
    def negative(self) -> bool:
        return self.sign < 0

    def __str__(self):
        return ("-" if self.sign < 0 else "") + self.tree.code

    def __neg__(self):
        return negate(self)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __truediv__(self, other):
        return div(self, other)


Operand = Union[SignedTree, CanonTree]


def signed(t: Operand) -> SignedTree:
    return t if isinstance(t, SignedTree) else SignedTree(t)


def _contains(big: Counter, small: Counter) -> bool:
    return all(big[k] >= v for k, v in small.items())


def add(a: Operand, b: Operand) -> SignedTree:
    a, b = signed(a), signed(b)
    if a.is_one:
        return b
    if b.is_one:
        return a
    if a.sign == b.sign:
        return SignedTree(CanonTree(a.tree.children + b.tree.children), a.sign)
    pos, neg = (a, b) if a.sign > 0 else (b, a)
    p, n = Counter(pos.tree.children), Counter(neg.tree.children)
    if _contains(p, n):
        return SignedTree(CanonTree((p - n).elements()), 1)
    if _contains(n, p):
        return SignedTree(CanonTree((n - p).elements()), -1)
    raise SubtractionUndefined(
        f"neither root-subtree multiset of {pos} and {neg} contains the other"
    )


def negate(a: Operand) -> SignedTree:
    a = signed(a)
    return SignedTree(a.tree, -a.sign)


def sub(t: Operand, b: Operand) -> SignedTree:
    return add(t, negate(b))


def _mul_trees(a: CanonTree, b: CanonTree) -> CanonTree:
    extra = b.children
    if not extra:
        return a
    memo: dict[CanonTree, CanonTree] = {}

    def go(x: CanonTree) -> CanonTree:
        r = memo.get(x)
        if r is None:
            r = memo[x] = CanonTree(tuple(go(c) for c in x.children) + extra)
        return r

    return go(a)


def mul(a: Operand, b: Operand) -> SignedTree:
    a, b = signed(a), signed(b)
    return SignedTree(_mul_trees(a.tree, b.tree), a.sign * b.sign)


def _div_trees(t: CanonTree, b: CanonTree) -> CanonTree:
    peel = Counter(b.children)
    memo: dict[CanonTree, CanonTree] = {}

    def go(x: CanonTree) -> CanonTree:
        r = memo.get(x)
        if r is None:
            kids = Counter(x.children)
            if not _contains(kids, peel):
                raise DivisionUndefined(f"vertex {x} lacks the root subtrees of {b}")
            r = memo[x] = CanonTree(go(c) for c in (kids - peel).elements())
        return r

    return go(t)


def div(t: Operand, b: Operand) -> SignedTree:
    """The tree ``a`` with ``a * b == t``, found by peeling ``b``'s root subtrees top-down."""
    t, b = signed(t), signed(b)
    if t.size % b.size:
        raise DivisionUndefined(f"{b.size} does not divide {t.size}")
    return SignedTree(_div_trees(t.tree, b.tree), t.sign * b.sign)


def stretch(a: Operand) -> SignedTree:
    a = signed(a)
    return SignedTree(CanonTree((a.tree,)), a.sign)


def unstretch(a: Operand) -> SignedTree:
    a = signed(a)
    if len(a.tree.children) != 1:
        raise UnstretchUndefined(
            f"root of {a} has {len(a.tree.children)} subtrees, need exactly one"
        )
    return SignedTree(a.tree.children[0], a.sign)


def scalar_mul(k: int, a: Operand) -> SignedTree:
    """Sum of ``k`` copies of ``a``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    a = signed(a)
    return SignedTree(CanonTree(a.tree.children * k), a.sign)


def stretch_pow(k: int, a: Operand) -> SignedTree:
    """``a`` stretched ``k`` times."""
    if k < 1:
        raise ValueError("k must be >= 1")
    a = signed(a)
    t = a.tree
    for _ in range(k):
        t = CanonTree((t,))
    return SignedTree(t, a.sign)


def power(a: Operand, k: int) -> SignedTree:
    """Product of ``k`` copies of ``a``, by repeated squaring."""
    if k < 1:
        raise ValueError("k must be >= 1")
    a = signed(a)
    result = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def commutes(a: CanonTree, b: CanonTree) -> bool:
    return _mul_trees(a, b) == _mul_trees(b, a)


# -- editing at an arbitrary vertex ------------------------------------------

def _walk(t: CanonTree, path: Sequence[int]) -> list[CanonTree]:
    chain = [t]
    for depth, i in enumerate(path):
        kids = chain[-1].children
        if not 0 <= i < len(kids):
            raise InvalidPath(f"index {i} at depth {depth} out of range ({len(kids)} children)")
        chain.append(kids[i])
    return chain


def subtree_at(t: CanonTree, path: Sequence[int]) -> CanonTree:
    return _walk(t, path)[-1]


def _pos(x: SignedTree) -> CanonTree:
    assert x.sign > 0
    return x.tree


def _reassemble(chain: list[CanonTree], new_last: CanonTree) -> tuple[CanonTree, list[int]]:
    """Replace chain[-1] by new_last and rebuild upwards; also returns the new address."""
    rests = [_pos(sub(chain[i], stretch(chain[i + 1]))) for i in range(len(chain) - 1)]
    cur = new_last
    address: list[int] = []
    for rest in reversed(rests):
        parent = _pos(add(rest, stretch(cur)))
        address.append(parent.children.index(cur))
        cur = parent
    address.reverse()
    return cur, address


def graft(t: CanonTree, path: Sequence[int], a: CanonTree) -> CanonTree:
    """Attach ``a`` as a new subtree of the vertex addressed by ``path``.

    ``path`` lists child indices (in canonical order) from the root.
    """
    chain = _walk(t, path)
    grown = _pos(add(chain[-1], stretch(a)))
    return _reassemble(chain, grown)[0]


def prune_at(t: CanonTree, path: Sequence[int]) -> tuple[CanonTree, CanonTree, list[int]]:
    """Like :func:`prune`, plus the parent's address inside the pruned tree."""
    if not path:
        raise InvalidPath("cannot prune the root")
    chain = _walk(t, path)
    cut = chain[-1]
    parent = _pos(sub(chain[-2], stretch(cut)))
    rest, address = _reassemble(chain[:-1], parent)
    return rest, cut, address


def prune(t: CanonTree, path: Sequence[int]) -> tuple[CanonTree, CanonTree]:
    """Detach the subtree at ``path``; returns (remaining tree, detached subtree)."""
    rest, cut, _ = prune_at(t, path)
    return rest, cut
