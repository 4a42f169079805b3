"""Canonical families, global numbering, counting and random generation.

Trees are numbered 1, 2, 3, ... by vertex count first and by code value
(as a binary number) inside each family.  Families are materialized as
sorted tuples of code strings and cached, so ranking is a binary search.
"""

from __future__ import annotations

import os
import random
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterator

from .core import ONE, CanonTree, from_code

__all__ = [
    "EnumerationConfig",
    "LimitExceeded",
    "Rank",
    "count",
    "doubling_rule",
    "family",
    "family_codes",
    "first_index",
    "random_recursive_tree",
    "random_tree",
    "rank",
    "size_multisets",
    "unrank",
]


class LimitExceeded(RuntimeError):
    """A family is larger than the configured generation cap."""


@dataclass
class EnumerationConfig:
    cap: int = 10**7

    @classmethod
    def from_env(cls) -> EnumerationConfig:
        raw = os.environ.get("TREEARITH_CAP")
        return cls(cap=int(raw)) if raw else cls()


config = EnumerationConfig.from_env()


@dataclass(frozen=True)
class Rank:
    index: int
    family: int


_counts = [0, 1]  # _counts[n] = number of trees with n vertices
_weights = [0, 1]  # _weights[d] = sum_{e | d} e * count(e)


def count(n: int) -> int:
    """Number of rooted unordered trees with ``n`` vertices (exact, unbounded)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    while len(_counts) <= n:
        m = len(_counts) - 1  # computing count(m + 1)
        if len(_weights) == m:
            _weights.append(sum(e * _counts[e] for e in range(1, m + 1) if m % e == 0))
        total = sum(_weights[k] * _counts[m - k + 1] for k in range(1, m + 1))
        _counts.append(total // m)
    return _counts[n]


def first_index(n: int) -> int:
    """Global index of the first tree with ``n`` vertices."""
    return 1 + sum(count(m) for m in range(1, n))


def _check_cap(n: int, cap: int | None) -> None:
    limit = config.cap if cap is None else cap
    f = count(n)
    if f > limit:
        raise LimitExceeded(f"family {n} has {f} trees, above the cap of {limit}")


def size_multisets(n: int) -> list[tuple[int, ...]]:
    """Ascending multisets of positive integers summing to ``n - 1``, in lexicographic order."""
    if n < 2:
        raise ValueError("n must be >= 2")

    def parts(rem: int, least: int) -> Iterator[tuple[int, ...]]:
        for first in range(least, rem + 1):
            if first == rem:
                yield (first,)
            elif rem - first >= first:
                for rest in parts(rem - first, first):
                    yield (first,) + rest

    return list(parts(n - 1, 1))


@lru_cache(maxsize=None)
def _family_codes(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("10",)
    out = []
    for ms in size_multisets(n):
        sizes = sorted(set(ms))
        pools = [
            list(combinations_with_replacement(_family_codes(s), ms.count(s)))
            for s in sizes
        ]
        for pick in product(*pools):
            out.append("1" + "".join("".join(group) for group in pick) + "0")
    # equal lengths, so string order is binary-number order
    out.sort()
    return tuple(out)


def family_codes(n: int, cap: int | None = None) -> tuple[str, ...]:
    """Canonical codes of all trees with ``n`` vertices, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_cap(n, cap)
    return _family_codes(n)


def family(n: int, cap: int | None = None) -> list[CanonTree]:
    return [from_code(c) for c in family_codes(n, cap)]


def rank(t: CanonTree, cap: int | None = None) -> Rank:
    codes = family_codes(t.size, cap)
    pos = bisect_left(codes, t.code)
    assert codes[pos] == t.code
    return Rank(first_index(t.size) + pos, t.size)


def unrank(i: int, cap: int | None = None) -> CanonTree:
    if i < 1:
        raise ValueError("rank must be >= 1")
    n, start = 1, 1
    while start + count(n) <= i:
        start += count(n)
        n += 1
    return from_code(family_codes(n, cap)[i - start])


def doubling_rule(t: CanonTree) -> tuple[CanonTree, CanonTree]:
    """Extra leaf under the root, and a new root above ``t``."""
    return CanonTree(t.children + (ONE,)), CanonTree((t,))


def random_tree(n: int, rng: random.Random | None = None) -> CanonTree:
    """Uniformly random tree with ``n`` vertices (Nijenhuis-Wilf RANRUT)."""
    rng = rng or random.Random()
    count(n)
    return _ranrut(n, rng)


def _ranrut(n: int, rng: random.Random) -> CanonTree:
    if n <= 2:
        return ONE if n == 1 else CanonTree((ONE,))
    # pick (j, d) with weight d * f_d * f_{n - j d}; weights sum to (n - 1) f_n
    r = rng.randrange((n - 1) * _counts[n])
    for d in range(1, n):
        for j in range(1, (n - 1) // d + 1):
            r -= d * _counts[d] * _counts[n - j * d]
            if r < 0:
                base = _ranrut(n - j * d, rng)
                sub = _ranrut(d, rng)
                return CanonTree(base.children + (sub,) * j)
    raise AssertionError("unreachable")


def random_recursive_tree(n: int, rng: random.Random | None = None) -> CanonTree:
    """Attach vertices 1..n-1 to a uniformly chosen earlier vertex; handles very large n."""
    from .core import RawTree, canonize

    rng = rng or random.Random()
    nodes = [RawTree()]
    for _ in range(n - 1):
        child = RawTree()
        rng.choice(nodes).children.append(child)
        nodes.append(child)
    return canonize(nodes[0])
