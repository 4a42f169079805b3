#!/usr/bin/env python3
"""Per-size census: family size, add-prime and mult-prime counts, ratio f_n / f_(n+1)."""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from treearith import count, family, is_add_prime, is_mult_prime


@dataclass
class CensusConfig:
    max_n: int = 12
    enumerate_up_to: int = 12  # beyond this only counts are reported


def census(cfg: CensusConfig):
    for n in range(2, cfg.max_n + 1):
        row = {"n": n, "f_n": count(n), "ratio": f"{count(n) / count(n + 1):.5f}"}
        if n <= cfg.enumerate_up_to:
            trees = family(n)
            row["add_prime"] = sum(is_add_prime(t) for t in trees)
            row["mult_prime"] = sum(is_mult_prime(t) for t in trees)
        yield row


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=CensusConfig.max_n)
    p.add_argument("--enumerate-up-to", type=int, default=CensusConfig.enumerate_up_to)
    args = p.parse_args(argv)
    cfg = CensusConfig(args.max_n, args.enumerate_up_to)
    fields = ["n", "f_n", "add_prime", "mult_prime", "ratio"]
    w = csv.DictWriter(sys.stdout, fields, delimiter="\t", restval="")
    w.writeheader()
    for row in census(cfg):
        w.writerow(row)


if __name__ == "__main__":
    main()
