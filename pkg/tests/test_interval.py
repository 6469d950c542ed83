import random

import pytest

from compactsus import build_index, oracle_compute

from conftest import FIG1, random_texts


def test_fig1_query(fig1_index):
    res = fig1_index.interval.query(8, 10)
    assert res.intervals == [(6, 10), (7, 11), (8, 12)]
    assert res.occ == 3


def test_contained_mus_returns_query(fig1_index):
    assert fig1_index.interval.query(4, 5).intervals == [(4, 5)]
    assert fig1_index.interval.query(3, 12).intervals == [(3, 12)]


def test_whole_text():
    assert build_index("aba").interval.query(1, 3).intervals == [(1, 3)]
    assert build_index("a").interval.query(1, 1).intervals == [(1, 1)]


def test_rmq_over_mus_lengths(fig1_index):
    assert fig1_index.interval.rmq.query(1, 6) == 1
    assert build_index("aa").interval.rmq.query(1, 1) == 1


def test_all_intervals_against_oracle():
    for text in random_texts(120, seed=31, max_n=40):
        idx = build_index(text, point=False)
        orc = oracle_compute(text)
        n = len(text)
        for s in range(1, n + 1):
            for t in range(s, n + 1):
                assert idx.interval.query(s, t).intervals == orc.sus_of_interval(s, t), (text.tolist(), s, t)


def test_sus_length_and_length_at():
    idx = build_index(FIG1, point=False)
    orc = oracle_compute(FIG1)
    assert [idx.interval.length_at(p) for p in range(1, 18)] == orc.length_array
    assert idx.interval.sus_length(8, 10) == 5


@pytest.mark.parametrize("s,t", [(0, 1), (3, 2), (1, 18)])
def test_out_of_range(fig1_index, s, t):
    with pytest.raises(IndexError):
        fig1_index.interval.query(s, t)


def test_probe_budget():
    rng = random.Random(4)
    for text in random_texts(200, seed=32):
        iv = build_index(text, point=False).interval
        n = len(text)
        for _ in range(30):
            s = rng.randint(1, n)
            t = rng.randint(s, n)
            r = iv.query(s, t)
            assert r.probes <= 20 * (r.occ + 1)
