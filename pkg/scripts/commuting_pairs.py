#!/usr/bin/env python3
"""List pairs A, B with n_A > n_B and A*B == B*A, found by exhaustive search."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from treearith import commutes, family, rank


@dataclass
class SearchConfig:
    max_n: int = 8
    include_one: bool = False


def search(cfg: SearchConfig):
    low = 1 if cfg.include_one else 2
    trees = [t for n in range(low, cfg.max_n + 1) for t in family(n)]
    for a in trees:
        for b in trees:
            if a.size > b.size and commutes(a, b):
                yield a, b


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=SearchConfig.max_n)
    p.add_argument("--include-one", action="store_true")
    args = p.parse_args(argv)
    found = 0
    for a, b in search(SearchConfig(args.max_n, args.include_one)):
        found += 1
        print(f"#{rank(a).index}\t#{rank(b).index}\t{a.code}\t{b.code}")
    print(f"# {found} commuting pairs")


if __name__ == "__main__":
    main()
