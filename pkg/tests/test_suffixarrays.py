import itertools

import numpy as np
import pytest

from compactsus.suffixarrays import (NIL, as_text, build_succinct_plcp, build_suffix_context,
                                     suffix_array)


def naive_context(s):
    n = len(s)
    sa = sorted(range(1, n + 1), key=lambda i: s[i - 1 :])
    isa = [0] * (n + 1)
    for r, i in enumerate(sa, 1):
        isa[i] = r

    def lcp_of(a, b):
        k = 0
        while a + k <= n and b + k <= n and s[a - 1 + k] == s[b - 1 + k]:
            k += 1
        return k

    lcp = [0] + [lcp_of(sa[r - 2], sa[r - 1]) for r in range(2, n + 1)] + [0]
    plcp = [lcp[isa[i] - 1] for i in range(1, n + 1)]
    rank_next = [sa[isa[i]] if isa[i] < n else None for i in range(1, n + 1)]
    return sa, isa[1:], lcp, plcp, rank_next


def as_lists(ctx):
    rn = [None if v == NIL else int(v) for v in ctx.rank_next[1:]]
    return ctx.sa[1:].tolist(), ctx.isa[1:].tolist(), ctx.lcp[1:].tolist(), ctx.plcp[1:].tolist(), rn


def test_aba():
    ctx = build_suffix_context("aba")
    assert as_lists(ctx) == ([3, 1, 2], [2, 3, 1], [0, 1, 0, 0], [1, 0, 0], [2, None, 1])


def test_single_and_double():
    sa, _, lcp, plcp, _ = as_lists(build_suffix_context("a"))
    assert (sa, lcp, plcp) == ([1], [0, 0], [0])
    sa, isa, lcp, plcp, _ = as_lists(build_suffix_context("aa"))
    assert (sa, isa, lcp, plcp) == ([2, 1], [2, 1], [0, 1, 0], [1, 0])


def test_exhaustive_binary_against_naive_sort():
    for n in range(1, 10):
        for t in itertools.product("ab", repeat=n):
            s = "".join(t)
            assert as_lists(build_suffix_context(s)) == naive_context(s)


def test_random_against_naive_sort():
    rng = np.random.default_rng(11)
    for _ in range(100):
        n = int(rng.integers(1, 120))
        s = "".join(chr(97 + int(c)) for c in rng.integers(0, int(rng.choice([1, 2, 4, 26])), n))
        assert as_lists(build_suffix_context(s)) == naive_context(s)


def test_suffix_array_alone_matches_context():
    assert suffix_array("bcaacaabcaaababca").tolist() == build_suffix_context("bcaacaabcaaababca").sa.tolist()


def test_succinct_plcp_examples():
    sp = build_succinct_plcp(build_suffix_context("aba"))
    assert sp.bits.one_positions().tolist() == [3, 4, 6]
    assert sp.access(1) == 1
    sp = build_succinct_plcp(build_suffix_context("a"))
    assert sp.bits.one_positions().tolist() == [2]
    assert sp.access(1) == 0


def test_succinct_plcp_random():
    rng = np.random.default_rng(2)
    for sigma in (1, 2, 4, 26):
        ctx = build_suffix_context(rng.integers(0, sigma, 1000))
        sp = build_succinct_plcp(ctx)
        assert [sp.access(i) for i in range(1, 1001)] == ctx.plcp[1:].tolist()
        assert np.array_equal(sp.to_array()[1:], ctx.plcp[1:])
        assert sp.total_bits <= 2 * 1000 + 0.5 * 2000 + 64


def test_input_forms():
    a = as_text(b"abc").symbols.tolist()
    assert as_text("abc").symbols.tolist() == a
    assert as_text([97, 98, 99]).symbols.tolist() == a
    with pytest.raises(ValueError, match="empty text"):
        as_text(b"")
    with pytest.raises(ValueError):
        as_text([[1, 2]])
