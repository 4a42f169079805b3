"""Primality and unique factorization for tree addition and multiplication.

Multiplicative primality uses the fact that in ``T = A * B`` the root
subtrees of ``B`` are exactly the root subtrees of ``T`` up to some size.
So the candidate right factors are the roots over size-prefixes of
``T``'s (size-sorted) root subtrees, each tried by division.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterator

from .arith import DivisionUndefined, _div_trees, _mul_trees
from .core import ONE, CanonTree
from .enumeration import family

__all__ = [
    "FactorList",
    "OracleCapExceeded",
    "PrimalityUndefined",
    "SubtreeGroups",
    "add_factorize",
    "brute_force_is_mult_prime",
    "is_add_prime",
    "is_mult_prime",
    "mp_split",
    "mp_split_erase",
    "mult_factorize",
    "subtree_groups",
]


class PrimalityUndefined(ValueError):
    """Primality is only defined for trees with more than one vertex."""


class OracleCapExceeded(ValueError):
    pass


def _require_nontrivial(t: CanonTree) -> None:
    if t.size == 1:
        raise PrimalityUndefined("the single-vertex tree is neither prime nor composite")


@dataclass(frozen=True)
class SubtreeGroups:
    """Root subtrees bucketed by size: ``groups[i] = (size, ((shape, multiplicity), ...))``."""

    groups: tuple[tuple[int, tuple[tuple[CanonTree, int], ...]], ...]

    @property
    def sizes(self) -> list[int]:
        return [g for g, _ in self.groups]

    def prefix(self, i: int) -> tuple[CanonTree, ...]:
        """The root subtrees in groups ``1..i`` (1-based), with multiplicity, canonical order."""
        out: list[CanonTree] = []
        for _, shapes in self.groups[:i]:
            for shape, m in shapes:
                out.extend([shape] * m)
        return tuple(out)

    def __len__(self):
        return len(self.groups)


def subtree_groups(t: CanonTree) -> SubtreeGroups:
    _require_nontrivial(t)
    by_size: dict[int, Counter] = {}
    for c in t.children:
        by_size.setdefault(c.size, Counter())[c] += 1
    return SubtreeGroups(
        tuple((g, tuple(sorted(cnt.items()))) for g, cnt in sorted(by_size.items()))
    )


def is_add_prime(t: CanonTree) -> bool:
    _require_nontrivial(t)
    return len(t.children) == 1


def add_factorize(t: CanonTree) -> list[CanonTree]:
    """One stretched root subtree per addend; their sum is ``t``."""
    _require_nontrivial(t)
    return [CanonTree((c,)) for c in t.children]


def _candidate_ends(t: CanonTree) -> Iterator[int]:
    # children are size-sorted, so each H_i is a prefix t.children[:end]
    kids = t.children
    for end in range(1, len(kids)):
        if kids[end].size != kids[end - 1].size:
            yield end


def mp_split(t: CanonTree) -> tuple[CanonTree, CanonTree] | None:
    """``(A, B)`` with ``A * B == t`` and ``B`` mult-prime, or None if ``t`` is mult-prime.

    Tries the size groups in increasing order, so ``B`` is the smallest
    non-trivial right factor.
    """
    for end in _candidate_ends(t):
        b = CanonTree._from_sorted(t.children[:end])
        if t.size % b.size:
            continue
        try:
            return _div_trees(t, b), b
        except DivisionUndefined:
            continue
    return None


class _Node:
    __slots__ = ("shape", "children")

    def __init__(self, shape: CanonTree):
        self.shape = shape
        self.children = [_Node(c) for c in shape.children]

    def rebuild(self) -> CanonTree:
        return CanonTree(c.rebuild() for c in self.children)


def mp_split_erase(t: CanonTree) -> tuple[CanonTree, CanonTree] | None:
    """Same contract as :func:`mp_split`, run as a literal preorder erase on a working copy.

    Kept as an independent cross-check of the division-based route.
    """
    for end in _candidate_ends(t):
        h = Counter(t.children[:end])
        z = _Node(t)
        stack = [z]
        completed = True
        while stack:
            x = stack.pop()
            have = Counter(c.shape for c in x.children)
            if any(have[s] < m for s, m in h.items()):
                completed = False
                break
            need = Counter(h)
            kept = []
            for c in x.children:
                if need[c.shape]:
                    need[c.shape] -= 1
                else:
                    kept.append(c)
            x.children = kept
            stack.extend(reversed(kept))
        if completed:
            return z.rebuild(), CanonTree._from_sorted(t.children[:end])
    return None


def is_mult_prime(t: CanonTree) -> bool:
    _require_nontrivial(t)
    return mp_split(t) is None


@dataclass(frozen=True)
class FactorList:
    """Mult-prime factors, left to right."""

    factors: tuple[CanonTree, ...]

    def product(self) -> CanonTree:
        return reduce(_mul_trees, self.factors, ONE)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __getitem__(self, i):
        return self.factors[i]


def mult_factorize(t: CanonTree) -> FactorList:
    """Unique factorization into mult-prime trees; the single vertex gives an empty list."""
    rev: list[CanonTree] = []
    while t.size > 1:
        split = mp_split(t)
        if split is None:
            rev.append(t)
            break
        t, b = split
        rev.append(b)
    return FactorList(tuple(reversed(rev)))


def _divisor_pairs(n: int) -> list[tuple[int, int]]:
    return [(a, n // a) for a in range(2, n) if n % a == 0]


@lru_cache(maxsize=None)
def _products(n: int) -> frozenset[str]:
    out = set()
    for a, b in _divisor_pairs(n):
        for x in family(a):
            for y in family(b):
                out.add(_mul_trees(x, y).code)
    return frozenset(out)


def brute_force_is_mult_prime(t: CanonTree, cap: int = 12) -> bool:
    """Exhaustive check: ``t`` is not among the products of all non-trivial factor pairs."""
    _require_nontrivial(t)
    if t.size > cap:
        raise OracleCapExceeded(f"oracle limited to {cap} vertices, got {t.size}")
    return t.code not in _products(t.size)
