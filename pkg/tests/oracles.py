"""Independent reference implementations used only by the tests."""

from __future__ import annotations

from itertools import product

from treearith.core import CanonTree, RawTree, canonize


def parents(t: CanonTree) -> list[int]:
    """Preorder parent array; parents[0] = -1."""
    out = []
    stack = [(t, -1)]
    while stack:
        node, p = stack.pop()
        me = len(out)
        out.append(p)
        stack.extend((c, me) for c in reversed(node.children))
    return out


def from_parents(par: list[int]) -> CanonTree:
    nodes = [RawTree() for _ in par]
    for i, p in enumerate(par):
        if p >= 0:
            nodes[p].children.append(nodes[i])
    return canonize(nodes[0])


def naive_mul(a: CanonTree, b: CanonTree) -> CanonTree:
    """Explicit vertex copy: every vertex of ``a`` receives a copy of ``b``'s non-root part."""
    pa, pb = parents(a), parents(b)
    par = list(pa)
    for x in range(len(pa)):
        base = len(par)
        for j in range(1, len(pb)):
            par.append(x if pb[j] == 0 else base + pb[j] - 1)
    return from_parents(par)


def naive_add(a: CanonTree, b: CanonTree) -> CanonTree:
    pa, pb = parents(a), parents(b)
    base = len(pa)
    par = list(pa) + [0 if pb[j] == 0 else base + pb[j] - 1 for j in range(1, len(pb))]
    return from_parents(par)


def brute_family_codes(n: int) -> list[str]:
    """All trees of n vertices from every recursive parent array, sorted as binary numbers."""
    codes = set()
    for choice in product(*[range(i) for i in range(1, n)]):
        codes.add(from_parents([-1, *choice]).code)
    return sorted(codes, key=lambda c: int(c, 2))


def is_proper_subtree(b: CanonTree, a: CanonTree) -> bool:
    return any(s == b for s in a.preorder() if s is not a)
