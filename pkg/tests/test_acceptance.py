"""Exit criteria.  Each test records one PASS/FAIL line, printed in the terminal summary."""

import random
import time
from contextlib import contextmanager
from functools import reduce
from itertools import product

import pytest

from conftest import record
from oracles import is_proper_subtree
from treearith import (ONE, SignedTree, add, brute_force_is_mult_prime, commutes, count,
                       decompose, evaluate, family, family_codes, is_add_prime, is_mult_prime,
                       mul, mult_factorize, negate, quasi_pythagorean, rank, scalar_mul,
                       solve_eq2, solve_eq3, stretch, unrank)
from treearith.core import CanonTree, RawTree, canonize
from treearith.enumeration import random_tree
from treearith.equations import NoSolution


@contextmanager
def criterion(name: str, budget: float):
    start = time.perf_counter()
    ok = False
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        ok = elapsed < budget
        detail = f"({elapsed:.2f}s, budget {budget:g}s)"
        assert ok, f"{name} took {elapsed:.2f}s, budget {budget}s"
    except AssertionError as err:
        if not detail:
            detail = f"({str(err).splitlines()[0][:80]})"
        raise
    finally:
        record(name, ok, detail)


def test_golden_table(golden):
    with criterion(" 1. first 37 ranks match golden codes", 1.0):
        assert {i: unrank(i).code for i in range(1, 38)} == golden


def test_family_counts():
    with criterion(" 2. family counts", 10.0):
        assert [count(n) for n in range(1, 7)] == [1, 1, 2, 4, 9, 20]
        for n in range(1, 13):
            assert count(n) == len(family_codes(n))


def test_count_asymptotics():
    with criterion(" 3. ratio and lower bound", 1.0):
        assert abs(count(24) / count(25) - 0.34) < 0.02
        for n in range(2, 26):
            assert count(n) >= 2 ** (n - 2)


def test_six_vertex_primality():
    with criterion(" 4. F6 mult-prime table", 1.0):
        composite = {rank(t).index: [rank(f).index for f in mult_factorize(t)]
                     for t in family(6) if not is_mult_prime(t)}
        assert composite == {20: [2, 3], 22: [3, 2], 24: [4, 2], 28: [2, 4]}


def test_mult_prime_matches_brute_force():
    with criterion(" 5. MP vs brute force, 2 <= n <= 11", 300.0):
        checked = 0
        for n in range(2, 12):
            for t in family(n):
                assert is_mult_prime(t) == brute_force_is_mult_prime(t), t
                checked += 1
        assert checked == sum(count(n) for n in range(2, 12))


def _random_prime(n, rng):
    while True:
        t = random_tree(n, rng)
        prime = brute_force_is_mult_prime(t) if n <= 12 else is_mult_prime(t)
        if prime:
            return t


def test_unique_factorization():
    rng = random.Random(2024)
    with criterion(" 6. unique factorization, 1000 products", 60.0):
        for _ in range(1000):
            k = rng.randint(1, 4)
            sizes = []
            budget = 60
            for j in range(k):
                top = budget // 2 ** (k - j - 1)
                if top < 2:
                    break
                s = rng.randint(2, min(top, 30))
                sizes.append(s)
                budget //= s
            factors = [_random_prime(s, rng) for s in sizes]
            left = reduce(lambda x, y: mul(x, y).tree, factors)
            right = reduce(lambda x, y: mul(y, x).tree, reversed(factors))
            assert left.size <= 60
            assert left == right
            fl = mult_factorize(left)
            assert fl.product() == left
            assert list(fl) == factors
            assert mult_factorize(right) == fl


def _check_laws(a, b, c):
    assert add(a, b).size == a.size + b.size - 1
    assert mul(a, b).size == a.size * b.size
    assert stretch(a).size == a.size + 1
    assert add(a, b) == add(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    distributes = mul(add(a, b), c) == add(mul(a, c), mul(b, c))
    assert distributes == (c.size == 1)


def test_algebraic_laws():
    rng = random.Random(77)
    small = [t for n in range(1, 6) for t in family(n)]
    upto8 = [t for n in range(2, 9) for t in family(n)]
    with criterion(" 7. algebraic laws", 300.0):
        for a, b, c in product(small, repeat=3):
            _check_laws(a, b, c)
        for _ in range(10_000):
            a, b, c = (random_tree(rng.randint(6, 10), rng) for _ in range(3))
            _check_laws(a, b, c)
        for n in range(1, 6):
            for a, b in product(family(n), repeat=2):
                assert commutes(a, b) == (a == b)
        found = 0
        for a in upto8:
            for b in upto8:
                if a.size > b.size and commutes(a, b):
                    found += 1
                    assert a.size * b.leaves == b.size * a.leaves
                    assert is_proper_subtree(b, a)
                    if len(a.children) >= len(b.children):
                        rest = list(a.children)
                        for sub in b.children:
                            assert sub in rest
                            rest.remove(sub)
        assert found > 0


def test_add_prime_census():
    with criterion(" 8. add-prime census", 10.0):
        for n in range(3, 13):
            assert sum(is_add_prime(t) for t in family(n)) == count(n - 1)


def test_single_generator():
    with criterion(" 9. single generator", 60.0):
        for n in range(1, 11):
            for t in family(n):
                assert evaluate(decompose(t)) == SignedTree(t)


def test_equation_solver():
    rng = random.Random(10)
    shapes = [t for n in range(2, 6) for t in family(n)]
    with criterion("10. linear equation solver", 60.0):
        for _ in range(500):
            x = SignedTree(random_tree(rng.randint(1, 10), rng), rng.choice([1, -1]))
            a = rng.randint(1, 5)
            sol = solve_eq2(a, negate(scalar_mul(a, x)))
            assert sol.x == x and sol.is_valid()
        for i in range(500):
            a, b = rng.randint(1, 5), rng.randint(1, 5)
            if i % 2:
                x = random_tree(rng.randint(1, 8), rng)
                y = random_tree(rng.randint(1, 8), rng)
                lhs = add(scalar_mul(a, x), scalar_mul(b, y))
            else:
                pool = rng.sample(shapes, rng.randint(1, 3))
                ys = {s: rng.randint(1, 3) for s in pool}
                xs = {s: b * m // a + rng.randint(1, 3) for s, m in ys.items()}
                x = CanonTree([s for s, m in xs.items() for _ in range(m)])
                y = SignedTree(CanonTree([s for s, m in ys.items() for _ in range(m)]), -1)
                lhs = add(scalar_mul(a, x), scalar_mul(b, y))
            sol = solve_eq3(a, b, negate(lhs))
            assert sol.is_valid() and sol.residual().is_one
        leaf3 = CanonTree([ONE] * 3)
        leaf1 = CanonTree([ONE])
        unsolvable = [
            lambda: solve_eq2(2, negate(leaf3)),
            lambda: solve_eq2(2, negate(unrank(6))),
            lambda: solve_eq2(3, negate(CanonTree([ONE] * 4))),
            lambda: solve_eq3(2, 2, negate(leaf1)),
            lambda: solve_eq3(2, 4, negate(leaf3)),
            lambda: solve_eq3(4, 6, negate(CanonTree([ONE] * 5))),
        ]
        for bad in unsolvable:
            with pytest.raises(NoSolution):
                bad()


def test_performance():
    rng = random.Random(11)
    trees = [random_tree(200, rng) for _ in range(90)]
    for a_size, b_size in ((8, 25), (25, 8), (4, 50), (10, 20), (2, 100)):
        for _ in range(2):
            trees.append(mul(random_tree(a_size, rng), random_tree(b_size, rng)).tree)
    assert len(trees) == 100 and all(t.size == 200 for t in trees)
    nodes = [RawTree()]
    for _ in range(9_999):
        child = RawTree()
        rng.choice(nodes).children.append(child)
        nodes.append(child)
    with criterion("11. performance (MP n=200, canonize n=10000)", 100.0):
        worst = 0.0
        for t in trees:
            start = time.perf_counter()
            is_mult_prime(t)
            worst = max(worst, time.perf_counter() - start)
        assert worst < 1.0
        start = time.perf_counter()
        canonize(nodes[0])
        assert time.perf_counter() - start < 1.0


def test_quasi_pythagorean_witness():
    with criterion("12. quasi-Pythagorean witness", 1.0):
        assert (4, 7, 8) in quasi_pythagorean(8)
