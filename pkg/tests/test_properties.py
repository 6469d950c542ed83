import numpy as np
from hypothesis import given, settings, strategies as st

from compactsus import build_index, oracle_compute
from compactsus.mus import mus_from_isa_lcp, mus_from_plcp_rank_next
from compactsus.suffixarrays import build_succinct_plcp, build_suffix_context

texts = st.integers(1, 26).flatmap(
    lambda sigma: st.lists(st.integers(0, sigma - 1), min_size=1, max_size=120))


def contained_mus(mus, iv):
    s, e = mus.starts(), mus.ends()
    return int(np.count_nonzero((s >= iv.start) & (e <= iv.end)))


@settings(max_examples=300, deadline=None)
@given(texts)
def test_mus_do_not_nest(text):
    mus = build_index(text, point=False).mus
    ivs = mus.intervals()
    for a in ivs:
        for b in ivs:
            assert a == b or not (a.start <= b.start and b.end <= a.end)


@settings(max_examples=300, deadline=None)
@given(texts)
def test_lengths_change_by_at_most_one(text):
    lengths = build_index(text).point.lengths()
    assert np.all(np.abs(np.diff(lengths)) <= 1)


@settings(max_examples=200, deadline=None)
@given(texts, st.data())
def test_each_point_sus_holds_one_mus_and_stays_in_window(text, data):
    idx = build_index(text)
    n = len(text)
    for p in range(1, n + 1):
        ell = idx.point.length_at(p)
        for iv in idx.point.query(p):
            assert contained_mus(idx.mus, iv) == 1
            assert iv.length == ell
            assert p - ell + 1 <= iv.start <= p <= iv.end <= p + ell - 1
    s = data.draw(st.integers(1, n))
    t = data.draw(st.integers(s, n))
    for iv in idx.interval.query(s, t):
        # an interval SUS may equal [s, t] and then hold several MUSs
        assert contained_mus(idx.mus, iv) >= 1
        assert iv.start <= s and t <= iv.end


@settings(max_examples=300, deadline=None)
@given(texts)
def test_succinct_plcp_and_builders_agree(text):
    ctx = build_suffix_context(text)
    sp = build_succinct_plcp(ctx)
    assert [sp.access(i) for i in range(1, len(text) + 1)] == ctx.plcp[1:].tolist()
    a = mus_from_isa_lcp(ctx)
    b = mus_from_plcp_rank_next(sp, ctx.rank_next)
    assert a.mb == b.mb and a.me == b.me


@settings(max_examples=150, deadline=None)
@given(texts)
def test_count_matches_enumeration_and_oracle(text):
    pt = build_index(text).point
    orc = oracle_compute(text)
    for p in range(1, len(text) + 1):
        assert pt.count(p) == len(pt.query(p)) == len(orc.sus_of_point(p))
