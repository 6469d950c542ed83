import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from compactsus.rangequery import MAX, MIN, RangeQuery


def leftmost_extremum(z, i, j, mode):
    seg = z[i - 1 : j]
    best = min(seg) if mode == MIN else max(seg)
    return i + seg.index(best)


def test_examples():
    assert RangeQuery.from_values([3, 1, 2], MIN).query(1, 3) == 2
    assert RangeQuery.from_values([3, 1, 2], MAX).query(1, 3) == 1
    assert RangeQuery.from_values([5, 5, 5], MIN).query(1, 3) == 1
    rq = RangeQuery.from_values([2, 1, 1, 4], MIN)
    assert rq.query(2, 4) == 2
    assert rq.query(3, 3) == 3


def test_exhaustive_small_arrays():
    for n in range(1, 11):
        for z in itertools.product((0, 1, 2), repeat=n):
            z = list(z)
            for mode in (MIN, MAX):
                rq = RangeQuery.from_values(z, mode)
                for i in range(1, n + 1):
                    for j in range(i, n + 1):
                        assert rq.query(i, j) == leftmost_extremum(z, i, j, mode)


@pytest.mark.parametrize("n", [500, 10000, 70000])
def test_random_ranges(n):
    rng = np.random.default_rng(n)
    z = rng.integers(0, 50, n).tolist()
    for mode in (MIN, MAX):
        rq = RangeQuery.from_values(z, mode)
        for _ in range(1000):
            i, j = sorted(int(v) for v in rng.integers(1, n + 1, 2))
            assert rq.query(i, j) == leftmost_extremum(z, i, j, mode)


def test_queries_need_no_values():
    calls = []
    z = [4, 2, 7, 2, 9, 1]

    def accessor(i):
        calls.append(i)
        return z[i - 1]

    rq = RangeQuery.build(accessor, len(z), MIN)
    seen = len(calls)
    assert rq.query(1, 5) == 2
    assert rq.query(1, 6) == 6
    assert len(calls) == seen


def test_directory_size_bound():
    n = 1 << 16
    rq = RangeQuery.from_values(np.random.default_rng(1).integers(0, 1000, n), MIN)
    assert rq.total_bits <= 4 * n


def test_invalid_ranges():
    rq = RangeQuery.from_values([1, 2, 3], MIN)
    for i, j in [(0, 1), (2, 1), (1, 4)]:
        with pytest.raises(IndexError):
            rq.query(i, j)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=200), st.data())
def test_property_leftmost_extremum(z, data):
    n = len(z)
    i = data.draw(st.integers(1, n))
    j = data.draw(st.integers(i, n))
    for mode in (MIN, MAX):
        assert RangeQuery.from_values(z, mode).query(i, j) == leftmost_extremum(z, i, j, mode)
