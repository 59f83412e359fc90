import random

import pytest

from coingap import CoinSet
from coingap._backend import available_backends


@pytest.fixture(params=available_backends())
def backend(request):
    """Run the test once per available kernel backend."""
    return request.param


@pytest.fixture
def rng():
    return random.Random(0xC0106A9)


def random_gcd1_set(rng, *, lo=2, hi=50, max_n=5) -> CoinSet:
    """Random coin set with gcd 1 and no coin equal to 1."""
    while True:
        n = rng.randint(2, max_n)
        coins = set(rng.randint(lo, hi) for _ in range(n))
        if len(coins) < 2:
            continue
        cs = CoinSet.of(coins)
        if cs.g == 1:
            return cs
