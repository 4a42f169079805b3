"""Canonical rooted unordered trees and their balanced binary codes.

A tree of ``n`` vertices is written as a string of ``2n`` bits: a preorder
walk emits ``1`` on entering a vertex and ``0`` on leaving it.  The canonical
form orders the children of every vertex by (vertex count, code) ascending,
which makes the code of each unordered tree unique.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Iterator, Sequence

__all__ = [
    "CanonTree",
    "DecodeError",
    "ONE",
    "RawTree",
    "canonize",
    "decode",
    "encode",
    "from_code",
    "measures",
    "normalize_code",
]


class DecodeError(ValueError):
    """Malformed tree code; ``position`` is the 0-based index of the first bad bit."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at bit {position})")
        self.position = position


@dataclass
class RawTree:
    """A rooted tree whose children are in arbitrary (input) order."""

    children: list[RawTree] = field(default_factory=list)

    @classmethod
    def from_nested(cls, nested: Sequence) -> RawTree:
        """Build from nested lists, e.g. ``[[], [[]]]`` is a root with a leaf and a 2-chain."""
        root = cls()
        stack = [(root, nested)]
        while stack:
            node, spec = stack.pop()
            for sub in spec:
                child = cls()
                node.children.append(child)
                stack.append((child, sub))
        return root

    def size(self) -> int:
        n = 0
        stack = [self]
        while stack:
            node = stack.pop()
            n += 1
            stack.extend(node.children)
        return n


@total_ordering
class CanonTree:
    """Immutable tree in canonical form.

    Children are kept sorted by ``(size, code)``.  Equality and hashing go
    through the code, so two instances are equal iff they are isomorphic.
    The total order (size, then code) coincides with comparing the codes as
    binary numbers.
    """

    __slots__ = ("children", "size", "leaves", "code", "_hash")

    def __init__(self, children: Iterable[CanonTree] = ()):
        kids = sorted(children, key=_key)
        self._set(tuple(kids))

    @classmethod
    def _from_sorted(cls, children: tuple[CanonTree, ...]) -> CanonTree:
        obj = cls.__new__(cls)
        obj._set(children)
        return obj

    def _set(self, children: tuple[CanonTree, ...]) -> None:
        code = "1" + "".join(c.code for c in children) + "0"
        put = object.__setattr__
        put(self, "children", children)
        put(self, "size", len(code) // 2)
        put(self, "leaves", sum(c.leaves for c in children) if children else 1)
        put(self, "code", code)
        put(self, "_hash", hash(code))

    def __setattr__(self, name, value):
        raise AttributeError("CanonTree is immutable")

    @property
    def root_degree(self) -> int:
        return len(self.children)

    @property
    def value(self) -> int:
        """The code read as a binary number."""
        return int(self.code, 2)

    def __eq__(self, other):
        if not isinstance(other, CanonTree):
            return NotImplemented
        return self.code == other.code

    def __lt__(self, other):
        if not isinstance(other, CanonTree):
            return NotImplemented
        return _key(self) < _key(other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"CanonTree({self.code!r})"

    def __str__(self):
        return self.code

    def __reduce__(self):
        return (from_code, (self.code,))

    def preorder(self) -> Iterator[CanonTree]:
        """Every subtree (one per vertex), in preorder."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def depths(self) -> list[int]:
        out = []
        stack = [(self, 0)]
        while stack:
            node, d = stack.pop()
            out.append(d)
            stack.extend((c, d + 1) for c in node.children)
        return sorted(out)

    def to_raw(self) -> RawTree:
        root = RawTree()
        stack = [(root, self)]
        while stack:
            raw, node = stack.pop()
            for c in node.children:
                rc = RawTree()
                raw.children.append(rc)
                stack.append((rc, c))
        return root


def _key(t: CanonTree):
    return (t.size, t.code)


ONE = CanonTree()


def normalize_code(text: str) -> str:
    """Strip whitespace; reject anything but 0/1."""
    bits = "".join(text.split())
    for i, ch in enumerate(bits):
        if ch not in "01":
            raise DecodeError(f"invalid character {ch!r}", i)
    return bits


def decode(code: str) -> RawTree:
    """Parse a balanced binary code into a tree, preserving child order."""
    bits = normalize_code(code)
    if not bits:
        raise DecodeError("empty code", 0)
    stack: list[RawTree] = []
    root = None
    for i, b in enumerate(bits):
        if root is not None and not stack:
            raise DecodeError("trailing bits after the tree closed", i)
        if b == "1":
            node = RawTree()
            if stack:
                stack[-1].children.append(node)
            else:
                root = node
            stack.append(node)
        else:
            if not stack:
                raise DecodeError("code must start with 1", i)
            stack.pop()
    if stack:
        raise DecodeError(f"unbalanced code, {len(stack)} vertices left open", len(bits))
    return root


def canonize(t: RawTree | CanonTree) -> CanonTree:
    """Bottom-up reordering of every child list by (size, code)."""
    if isinstance(t, CanonTree):
        return t
    # iterative post-order; deep chains would blow the recursion limit
    done: dict[int, CanonTree] = {}
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            kids = sorted((done[id(c)] for c in node.children), key=_key)
            done[id(node)] = CanonTree._from_sorted(tuple(kids))
        else:
            stack.append((node, True))
            stack.extend((c, False) for c in node.children)
    return done[id(t)]


def encode(t: CanonTree) -> str:
    return t.code


def from_code(code: str) -> CanonTree:
    return canonize(decode(code))


def measures(t: CanonTree) -> tuple[int, int, int]:
    """(vertex count, leaf count, number of root subtrees)."""
    return t.size, t.leaves, len(t.children)
