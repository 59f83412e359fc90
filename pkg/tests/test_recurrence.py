import pytest

from coingap import CoinSet, brute_count, count_at, count_sequence, reachability_sequence

from conftest import random_gcd1_set


class TestCountSequence:
    def test_parts_one_two(self):
        seq = count_sequence(CoinSet.of([1, 2]), 4)
        assert seq.counts == (1, 1, 2, 3, 5)

    def test_parts_two_three(self):
        seq = count_sequence(CoinSet.of([2, 3]), 7)
        assert seq.counts == (1, 0, 1, 1, 1, 2, 2, 3)

    def test_single_coin(self):
        seq = count_sequence(CoinSet.of([5]), 5)
        assert seq.counts == (1, 0, 0, 0, 0, 1)

    def test_k_max_zero(self):
        for coins in ([1, 2], [7], [4, 9, 11]):
            assert count_sequence(CoinSet.of(coins), 0).counts == (1,)

    def test_negative_k_max_rejected(self):
        with pytest.raises(ValueError):
            count_sequence(CoinSet.of([2, 3]), -1)

    def test_len_and_getitem(self):
        seq = count_sequence(CoinSet.of([2, 3]), 7)
        assert len(seq) == 8
        assert seq[5] == 2


class TestCountAt:
    def test_ordered_stacks_counted(self):
        # (2,3) and (3,2) are distinct stacks; the unordered count would be 1
        assert count_at(CoinSet.of([2, 3]), 5) == 2

    def test_below_smallest_coin(self):
        assert count_at(CoinSet.of([2, 3]), 1) == 0

    def test_fibonacci_value(self):
        assert count_at(CoinSet.of([1, 2]), 10) == 89

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            count_at(CoinSet.of([2, 3]), -1)


class TestProperties:
    def test_fibonacci_recurrence_for_parts_one_two(self):
        counts = count_sequence(CoinSet.of([1, 2]), 40).counts
        assert counts[0] == counts[1] == 1
        for k in range(2, 41):
            assert counts[k] == counts[k - 1] + counts[k - 2]

    def test_nonnegative_and_coin_multiples_positive(self, rng):
        for _ in range(20):
            cs = random_gcd1_set(rng, lo=1, hi=20, max_n=4)
            counts = count_sequence(cs, 60).counts
            assert all(v >= 0 for v in counts)
            for c in cs.coins:
                for m in range(0, 61, c):
                    assert counts[m] >= 1

    def test_zero_set_matches_reachability(self, rng):
        for _ in range(30):
            cs = random_gcd1_set(rng, lo=2, hi=25, max_n=4)
            horizon = 120
            counts = count_sequence(cs, horizon).counts
            reach = reachability_sequence(cs, horizon)
            for k in range(horizon + 1):
                assert (counts[k] == 0) == (not reach[k]), (cs, k)

    def test_agrees_with_brute_enumeration(self, rng):
        fixed = [CoinSet.of(c) for c in ([2, 3], [3, 7], [2, 5, 9], [4, 6, 9, 10])]
        for cs in fixed:
            for k in range(0, 31):
                assert count_at(cs, k) == brute_count(cs, k), (cs, k)
        for _ in range(10):
            cs = random_gcd1_set(rng, lo=2, hi=10, max_n=4)
            for k in range(0, 26):
                assert count_at(cs, k) == brute_count(cs, k), (cs, k)
