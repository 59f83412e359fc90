import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coingap import (
    CoinSet,
    CoinTooLarge,
    EmptyInput,
    MalformedToken,
    NonPositiveCoin,
    gcd_all,
    parse_coin_set,
)
from coingap.coinset import MAX_COIN


class TestParse:
    def test_two_coins(self):
        cs = parse_coin_set("3,5")
        assert cs.coins == (3, 5)
        assert (cs.g, cs.c_min, cs.c_max, cs.n) == (1, 3, 5, 2)

    def test_whitespace_and_duplicates(self):
        cs = parse_coin_set("6 10 15 10")
        assert cs.coins == (6, 10, 15)
        assert cs.g == 1
        assert cs.n == 3

    def test_gcd_above_one_is_accepted(self):
        cs = parse_coin_set("4,6")
        assert cs.coins == (4, 6)
        assert cs.g == 2

    def test_mixed_separators(self):
        assert parse_coin_set(" 5, 3\t8 ").coins == (3, 5, 8)
        assert parse_coin_set("7,,9").coins == (7, 9)

    def test_zero_coin_rejected(self):
        with pytest.raises(NonPositiveCoin):
            parse_coin_set("0,3")

    def test_negative_coin_rejected(self):
        with pytest.raises(NonPositiveCoin):
            parse_coin_set("-2 5")

    def test_empty_input(self):
        for text in ("", "   ", ",,,"):
            with pytest.raises(EmptyInput):
                parse_coin_set(text)

    def test_malformed_tokens(self):
        for text in ("3;5", "abc", "3.5", "0x10", "2 three"):
            with pytest.raises(MalformedToken):
                parse_coin_set(text)

    def test_word_size_bound(self):
        assert parse_coin_set(str(MAX_COIN)).coins == (MAX_COIN,)
        with pytest.raises(CoinTooLarge):
            parse_coin_set(str(MAX_COIN + 1))

    @given(st.lists(st.integers(1, 10**6), min_size=1, max_size=8))
    def test_parse_serialize_roundtrip(self, values):
        cs = parse_coin_set(" ".join(map(str, values)))
        assert parse_coin_set(str(cs)) == cs


class TestGcdAll:
    def test_singleton(self):
        assert gcd_all([7]) == 7

    def test_mixed(self):
        assert gcd_all([6, 10, 15]) == 1

    def test_all_even(self):
        assert gcd_all([4, 6, 8]) == 2

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            gcd_all([])

    @given(st.lists(st.integers(1, 500), min_size=1, max_size=6))
    def test_divides_all_and_is_maximal(self, values):
        g = gcd_all(values)
        assert all(v % g == 0 for v in values)
        for d in range(g + 1, max(values) + 1):
            assert any(v % d != 0 for v in values)

    @given(st.lists(st.integers(1, 10**9), min_size=2, max_size=8), st.randoms())
    def test_fold_order_irrelevant(self, values, rnd):
        shuffled = list(values)
        rnd.shuffle(shuffled)
        assert gcd_all(values) == gcd_all(shuffled)


class TestCoinSet:
    def test_of_canonicalizes(self):
        cs = CoinSet.of([10, 6, 15, 6])
        assert cs.coins == (6, 10, 15)
        assert cs.g == 1

    def test_of_empty(self):
        with pytest.raises(EmptyInput):
            CoinSet.of([])

    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            CoinSet((5, 3), 1)  # not increasing
        with pytest.raises(ValueError):
            CoinSet((3, 5), 2)  # wrong cached gcd
        with pytest.raises(NonPositiveCoin):
            CoinSet((0, 3), 1)

    def test_str_is_parse_input(self):
        cs = CoinSet.of([20, 9, 6])
        assert str(cs) == "6,9,20"
        assert parse_coin_set(str(cs)) == cs

    def test_gcd_cached_matches_math(self, rng):
        for _ in range(50):
            values = [rng.randint(1, 1000) for _ in range(rng.randint(1, 6))]
            cs = CoinSet.of(values)
            assert cs.g == math.gcd(*values)
