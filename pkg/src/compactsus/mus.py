"""Minimal unique substrings as a pair of marker bit vectors.

``mb[i] = 1`` iff a MUS starts at ``i`` and ``me[i] = 1`` iff one ends at
``i``.  MUSs never nest, so the ``k``-th one in ``mb`` pairs with the
``k``-th one in ``me`` and ordinals sort MUSs by start and end alike.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Union

import numpy as np

from .bitseq import BitVector
from .suffixarrays import NIL, SuccinctPlcp, SuffixContext


class Interval(NamedTuple):
    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def contains(self, other: "Interval") -> bool:
        return self.start <= other.start and other.end <= self.end

    def __repr__(self) -> str:
        return f"[{self.start},{self.end}]"


def cover(a: Interval, b: Union[Interval, int]) -> Interval:
    """Shortest interval containing both arguments (``b`` may be a point)."""
    if not isinstance(b, tuple):
        b = Interval(int(b), int(b))
    return Interval(min(a.start, b.start), max(a.end, b.end))


class MusIndex:
    def __init__(self, mb: BitVector, me: BitVector):
        if len(mb) != len(me):
            raise ValueError("MB and ME must have the same length")
        if mb.ones != me.ones or mb.ones < 1:
            raise ValueError("MB and ME must mark the same positive number of MUSs")
        self.mb = mb
        self.me = me
        self.n = len(mb)
        self.m = mb.ones

    def _check(self, k: int) -> None:
        if not 1 <= k <= self.m:
            raise IndexError(f"MUS ordinal {k} out of range 1..{self.m}")

    def start(self, k: int) -> int:
        self._check(k)
        return self.mb.select1(k)

    def end(self, k: int) -> int:
        self._check(k)
        return self.me.select1(k)

    def length(self, k: int) -> int:
        self._check(k)
        return self.me.select1(k) - self.mb.select1(k) + 1

    def interval(self, k: int) -> Interval:
        self._check(k)
        return Interval(self.mb.select1(k), self.me.select1(k))

    def pred_by_end(self, t: int) -> Optional[int]:
        """Ordinal of the MUS with the largest end ``<= t``."""
        if not 1 <= t <= self.n:
            raise IndexError(f"position {t} out of range 1..{self.n}")
        return self.me.rank1(t) or None

    def succ_by_start(self, s: int) -> Optional[int]:
        """Ordinal of the MUS with the smallest start ``>= s``."""
        if not 1 <= s <= self.n:
            raise IndexError(f"position {s} out of range 1..{self.n}")
        k = self.mb.rank1(s - 1) + 1
        return k if k <= self.m else None

    def starts(self) -> np.ndarray:
        return self.mb.one_positions()

    def ends(self) -> np.ndarray:
        return self.me.one_positions()

    def lengths(self) -> np.ndarray:
        return self.ends() - self.starts() + 1

    def intervals(self) -> list:
        return [Interval(s, e) for s, e in zip(self.starts().tolist(), self.ends().tolist())]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MusIndex):
            return NotImplemented
        return self.mb == other.mb and self.me == other.me

    @property
    def payload_bits(self) -> int:
        return self.mb.payload_bits + self.me.payload_bits

    @property
    def aux_bits(self) -> int:
        return self.mb.aux_bits + self.me.aux_bits


def markers_from_repeat_lengths(lre: np.ndarray) -> MusIndex:
    """MB/ME from ``lre[i]``, the longest repeating substring length at ``i``.

    ``T[i..i+lre[i]]`` is the shortest unique substring starting at ``i``
    when it fits in the text, and it is minimal iff ``lre[i] <= lre[i+1]``
    (``lre[n+1]`` counts as infinite).
    """
    n = lre.size - 1
    l = lre[1:]
    nxt = np.empty(n, dtype=np.int64)
    nxt[:-1] = l[1:]
    nxt[-1] = np.iinfo(np.int64).max
    pos = np.arange(1, n + 1)
    is_start = (pos + l <= n) & (l <= nxt)
    starts = pos[is_start]
    ends = starts + l[is_start]
    return MusIndex(BitVector.from_positions(starts, n), BitVector.from_positions(ends, n))


def repeat_lengths_from_isa_lcp(ctx: SuffixContext) -> np.ndarray:
    r = ctx.isa[1:]
    out = np.zeros(ctx.n + 1, dtype=np.int64)
    out[1:] = np.maximum(ctx.lcp[r], ctx.lcp[r + 1])
    return out


def repeat_lengths_from_plcp(plcp: Union[SuccinctPlcp, np.ndarray],
                             rank_next: np.ndarray) -> np.ndarray:
    n = rank_next.size - 1
    pos = np.arange(1, n + 1)
    nxt = rank_next[1:]
    if isinstance(plcp, SuccinctPlcp):
        own = plcp.access_many(pos)
        other = np.zeros(n, dtype=np.int64)
        has = nxt != NIL
        other[has] = plcp.access_many(nxt[has])
    else:
        own = plcp[1:]
        other = np.where(nxt != NIL, plcp[nxt], 0)
    out = np.zeros(n + 1, dtype=np.int64)
    out[1:] = np.maximum(own, other)
    return out


def mus_from_isa_lcp(ctx: SuffixContext) -> MusIndex:
    return markers_from_repeat_lengths(repeat_lengths_from_isa_lcp(ctx))


def mus_from_plcp_rank_next(plcp: Union[SuccinctPlcp, np.ndarray],
                            rank_next: np.ndarray) -> MusIndex:
    return markers_from_repeat_lengths(repeat_lengths_from_plcp(plcp, rank_next))
