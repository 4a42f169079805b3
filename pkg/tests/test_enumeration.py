import random

import pytest

from conftest import T
from oracles import brute_family_codes
from treearith import count, doubling_rule, family, family_codes, from_code, rank, unrank
from treearith.enumeration import LimitExceeded, first_index, random_tree, size_multisets


def test_small_counts():
    assert [count(n) for n in range(1, 7)] == [1, 1, 2, 4, 9, 20]


def test_count_matches_known_values():
    # OEIS A000081, independently tabulated
    assert [count(n) for n in range(7, 13)] == [48, 115, 286, 719, 1842, 4766]


def test_count_is_exact_far_out():
    assert count(100) > 2**64
    assert count(100) % 1 == 0


def test_count_rejects_zero():
    with pytest.raises(ValueError):
        count(0)


@pytest.mark.parametrize("n", range(1, 10))
def test_family_equals_brute_force(n):
    assert list(family_codes(n)) == brute_family_codes(n)


def test_family_4_is_rows_5_to_8(golden):
    assert list(family_codes(4)) == [golden[i] for i in range(5, 9)]


def test_family_1():
    assert family_codes(1) == ("10",)


def test_family_6_is_rows_18_to_37(golden):
    assert list(family_codes(6)) == [golden[i] for i in range(18, 38)]


def test_family_codes_strictly_increase():
    for n in range(1, 13):
        vals = [int(c, 2) for c in family_codes(n)]
        assert all(a < b for a, b in zip(vals, vals[1:]))
        assert len(vals) == count(n)


def test_lower_bound():
    for n in range(2, 13):
        assert count(n) >= 2 ** (n - 2)


def test_ratio_towards_one_third():
    assert abs(count(24) / count(25) - 0.34) < 0.02


def test_limit_exceeded():
    with pytest.raises(LimitExceeded):
        family_codes(8, cap=100)
    with pytest.raises(LimitExceeded):
        unrank(first_index(8), cap=100)
    assert len(family_codes(7, cap=100)) == 48


def test_size_multisets():
    assert size_multisets(6) == [
        (1, 1, 1, 1, 1), (1, 1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 4), (2, 3), (5,),
    ]
    assert size_multisets(2) == [(1,)]
    assert size_multisets(4) == [(1, 1, 1), (1, 2), (3,)]


def test_multiset_groups_follow_binary_order_up_to_6():
    for n in range(2, 7):
        groups = size_multisets(n)
        idx = [groups.index(tuple(c.size for c in t.children)) for t in family(n)]
        assert idx == sorted(idx)


def test_multiset_groups_break_binary_order_at_7():
    # binary order is authoritative; group order first disagrees at n = 7
    groups = size_multisets(7)
    idx = [groups.index(tuple(c.size for c in t.children)) for t in family(7)]
    assert idx != sorted(idx)


@pytest.mark.parametrize("code, index", [("1100", 2), ("1110011000", 13), ("111001110000", 28)])
def test_rank_examples(code, index):
    assert rank(from_code(code)).index == index


@pytest.mark.parametrize("index, code", [(1, "10"), (20, "110101101000"), (37, "111111000000")])
def test_unrank_examples(index, code):
    assert unrank(index).code == code


def test_rank_unrank_inverse():
    i = 1
    for n in range(1, 11):
        assert first_index(n) == i
        for t in family(n):
            r = rank(t)
            assert r.index == i and r.family == n
            assert unrank(i) == t
            i += 1


def test_doubling_rule_examples():
    assert doubling_rule(T(3)) == (T(5), T(7))
    assert doubling_rule(T(1)) == (T(2), T(2))


def test_doubling_rule_image_misses_27_28():
    image = {u for t in family(5) for u in doubling_rule(t)}
    missing = {rank(t).index for t in family(6) if t not in image}
    assert missing == {27, 28}


def test_doubling_rule_misses_13_in_family_5():
    image = {u for t in family(4) for u in doubling_rule(t)}
    assert {rank(t).index for t in family(5) if t not in image} == {13}


def test_doubling_rule_injective():
    for n in range(2, 11):
        images = [u for t in family(n - 1) for u in doubling_rule(t)]
        if n == 2:
            continue  # both constructions coincide on the single vertex
        assert len(set(images)) == len(images)
        assert all(u.size == n for u in images)


def test_random_tree_is_uniform_enough():
    rng = random.Random(7)
    seen = {}
    for _ in range(4000):
        t = random_tree(5, rng)
        seen[t] = seen.get(t, 0) + 1
    assert set(seen) == set(family(5))
    # 9 trees, expected ~444 each
    assert min(seen.values()) > 300 and max(seen.values()) < 600


def test_random_tree_sizes():
    rng = random.Random(1)
    for n in (1, 2, 3, 17, 60):
        assert random_tree(n, rng).size == n
