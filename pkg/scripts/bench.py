#!/usr/bin/env python3
"""Timing for mult-primality, factorization and canonization on large random trees."""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from treearith import is_mult_prime, mul, mult_factorize
from treearith.core import RawTree, canonize
from treearith.enumeration import random_tree


@dataclass
class BenchConfig:
    n: int = 200
    trials: int = 100
    canon_n: int = 10_000
    seed: int = 0


def _timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def run(cfg: BenchConfig) -> dict[str, float]:
    rng = random.Random(cfg.seed)
    trees = [random_tree(cfg.n, rng) for _ in range(cfg.trials)]
    mp = max(_timed(is_mult_prime, t)[1] for t in trees)

    half = max(2, int(cfg.n ** 0.5))
    products = [mul(random_tree(half, rng), random_tree(cfg.n // half, rng)).tree
                for _ in range(cfg.trials)]
    fact = max(_timed(mult_factorize, t)[1] for t in products)

    nodes = [RawTree()]
    for _ in range(cfg.canon_n - 1):
        child = RawTree()
        rng.choice(nodes).children.append(child)
        nodes.append(child)
    _, canon = _timed(canonize, nodes[0])
    return {"is_mult_prime max": mp, "mult_factorize max": fact, "canonize": canon}


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=BenchConfig.n)
    p.add_argument("--trials", type=int, default=BenchConfig.trials)
    p.add_argument("--canon-n", type=int, default=BenchConfig.canon_n)
    p.add_argument("--seed", type=int, default=BenchConfig.seed)
    args = p.parse_args(argv)
    for name, secs in run(BenchConfig(args.n, args.trials, args.canon_n, args.seed)).items():
        print(f"{name:20s} {secs * 1000:9.3f} ms")


if __name__ == "__main__":
    main()
