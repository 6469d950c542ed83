import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from compactsus.bitseq import BitVector, TernarySeq


def naive_rank(bits, c, i):
    return sum(1 for b in bits[:i] if b == c)


def naive_select(bits, c, k):
    hits = [p + 1 for p, b in enumerate(bits) if b == c]
    return hits[k - 1] if 1 <= k <= len(hits) else None


def naive_pred(bits, d):
    return next((p for p in range(d, 0, -1) if bits[p - 1]), None)


def naive_succ(bits, d):
    return next((p for p in range(d, len(bits) + 1) if bits[p - 1]), None)


def check_against_scan(bits):
    bv = BitVector(bits)
    n = len(bits)
    assert bv.ones == sum(bits)
    for i in range(n + 1):
        assert bv.rank1(i) == naive_rank(bits, 1, i)
        assert bv.rank0(i) == naive_rank(bits, 0, i)
    for k in range(0, n + 2):
        assert bv.select1(k) == naive_select(bits, 1, k)
        assert bv.select0(k) == naive_select(bits, 0, k)
    for d in range(1, n + 1):
        assert bv.pred(d) == naive_pred(bits, d)
        assert bv.succ(d) == naive_succ(bits, d)


def test_hand_counted_example():
    bv = BitVector("01001")
    assert bv.rank(1, 3) == 1
    assert bv.select(1, 2) == 5
    assert bv.pred(4) == 2
    assert bv.pred(1) is None
    assert bv.pred(5) == 5
    assert bv.succ(3) == 5
    assert bv.succ(2) == 2
    assert BitVector("01000").succ(3) is None


def test_all_ones():
    bv = BitVector([1] * 8)
    for i in range(1, 9):
        assert bv.rank(1, i) == i
        assert bv.select(1, i) == i


def test_exhaustive_short_vectors():
    for n in range(1, 13):
        for bits in itertools.product((0, 1), repeat=n):
            check_against_scan(list(bits))


@pytest.mark.parametrize("n,density", [(64, 0.5), (2048, 0.1), (70000, 0.5), (100000, 0.01), (100000, 0.99)])
def test_random_against_linear_scan(n, density):
    rng = np.random.default_rng(n)
    bits = (rng.random(n) < density).astype(np.uint8)
    bv = BitVector(bits)
    prefix = np.concatenate([[0], np.cumsum(bits)])
    ones = np.flatnonzero(bits) + 1
    zeros = np.flatnonzero(bits == 0) + 1
    for i in rng.integers(0, n + 1, 10000):
        assert bv.rank1(int(i)) == prefix[i]
    for k in rng.integers(1, max(2, ones.size + 1), 2000):
        assert bv.select1(int(k)) == (ones[k - 1] if k <= ones.size else None)
    for k in rng.integers(1, max(2, zeros.size + 1), 2000):
        assert bv.select0(int(k)) == (zeros[k - 1] if k <= zeros.size else None)
    assert np.array_equal(bv.rank1_many(np.arange(n + 1)), prefix)


def test_directory_overhead_bound():
    for n in (1 << 16, 1 << 20):
        bv = BitVector(np.random.default_rng(0).integers(0, 2, n))
        assert bv.aux_bits <= 0.5 * n


def test_bounds():
    bv = BitVector("0110")
    with pytest.raises(IndexError):
        bv.rank1(5)
    with pytest.raises(IndexError):
        bv.pred(0)
    with pytest.raises(ValueError):
        BitVector([])
    assert bv.select1(0) is None and bv.select1(3) is None


def test_words_round_trip():
    bits = np.random.default_rng(3).integers(0, 2, 1000)
    bv = BitVector(bits)
    assert BitVector.from_words(bv.words, 1000) == bv
    assert np.array_equal(bv.to_array(), bits)
    assert BitVector.from_positions(bv.one_positions(), 1000) == bv


@given(st.lists(st.integers(0, 1), min_size=1, max_size=300))
def test_rank_select_inverse(bits):
    bv = BitVector(bits)
    for k in range(1, bv.ones + 1):
        assert bv.rank1(bv.select1(k)) == k
    for k in range(1, bv.zeros + 1):
        assert bv.rank0(bv.select0(k)) == k


def test_ternary_examples():
    ts = TernarySeq([0, -1, 1])
    assert ts.rank(1, 3) == 1
    assert ts.select(-1, 1) == 2
    z = TernarySeq([0] * 6)
    assert z.rank(-1, 6) == z.rank(1, 6) == 0


def test_ternary_exhaustive():
    for n in range(1, 9):
        for sym in itertools.product((-1, 0, 1), repeat=n):
            ts = TernarySeq(sym)
            assert ts.to_array().tolist() == list(sym)
            for c in (-1, 0, 1):
                for i in range(n + 1):
                    assert ts.rank(c, i) == naive_rank(sym, c, i)
                for k in range(1, n + 2):
                    assert ts.select(c, k) == naive_select(sym, c, k)


def test_ternary_random_large():
    rng = np.random.default_rng(5)
    sym = rng.integers(-1, 2, 100000)
    ts = TernarySeq(sym)
    for c in (-1, 0, 1):
        prefix = np.concatenate([[0], np.cumsum(sym == c)])
        where = np.flatnonzero(sym == c) + 1
        for i in rng.integers(0, sym.size + 1, 2000):
            assert ts.rank(c, int(i)) == prefix[i]
        for k in rng.integers(1, where.size + 1, 500):
            assert ts.select(c, int(k)) == where[k - 1]


def test_ternary_rejects_other_symbols():
    with pytest.raises(ValueError):
        TernarySeq([0, 2])
