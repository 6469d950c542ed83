import pytest

from compactsus import build_index, oracle_compute

from conftest import FIG1, random_texts


def test_fig1(fig1_index):
    pt = fig1_index.point
    assert pt.query(7).intervals == [(4, 7), (5, 8), (6, 9)]
    assert pt.leftmost_sus(7) == (4, 7)
    assert pt.rightmost_sus(7) == (6, 9)
    assert pt.count(7) == 3
    assert pt.length_at(7) == 4
    assert pt.length_at(1) == pt.length1
    assert pt.mus_begin[7] == 0
    assert pt.mus_begin.one_positions().tolist() == [4, 5, 6, 10, 13]
    assert pt.succ_meaningful_start(7) == 10
    assert pt.pred_meaningful_start(7) == 6
    assert pt.query(8).intervals == oracle_compute(FIG1).sus_of_point(8)


def test_aba():
    pt = build_index("aba").point
    assert pt.diff.to_array().tolist() == [0, -1, 1]
    assert pt.length1 == 2
    assert pt.mus_begin.to_array().tolist() == [0, 1, 0]
    assert [pt.length_at(i) for i in (1, 2, 3)] == [2, 1, 2]
    assert pt.pred_neq(3) == 2 and pt.succ_neq(3) is None
    assert pt.succ_neq(1) == 2
    assert pt.succ_meaningful_start(1) == 2
    assert pt.leftmost_sus(1) == (1, 2)
    assert pt.rightmost_sus(1) == (1, 2)


def test_aa():
    pt = build_index("aa").point
    assert pt.diff.to_array().tolist() == [0, 0]
    assert pt.length1 == 2
    assert pt.mus_begin.to_array().tolist() == [1, 0]
    assert pt.pred_neq(1) is None and pt.succ_neq(1) is None
    assert pt.leftmost_sus(2) == (1, 2)
    assert pt.rightmost_sus(1) == (1, 2)
    assert pt.query(2).intervals == [(1, 2)]
    assert pt.count(1) == 1


def test_single_symbol():
    pt = build_index("z").point
    assert pt.query(1).intervals == [(1, 1)]


def test_point_only_build_matches():
    full = build_index(FIG1).point
    alone = build_index(FIG1, interval=False).point
    assert alone.diff.to_array().tolist() == full.diff.to_array().tolist()
    assert alone.mus_begin == full.mus_begin


def test_all_points_against_oracle():
    for text in random_texts(200, seed=41, max_n=80):
        pt = build_index(text).point
        orc = oracle_compute(text)
        for p in range(1, len(text) + 1):
            want = orc.sus_of_point(p)
            res = pt.query(p)
            assert res.intervals == want, (text.tolist(), p)
            assert pt.count(p) == len(want)
            assert res.probes <= 20 * (res.occ + 1)


@pytest.mark.parametrize("p", [0, 18])
def test_out_of_range(fig1_index, p):
    with pytest.raises(IndexError):
        fig1_index.point.query(p)
