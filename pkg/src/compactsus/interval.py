"""Interval SUS queries over the MUS markers and an RmQ on MUS lengths."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .mus import Interval, MusIndex
from .rangequery import MIN, RangeQuery


@dataclass
class QueryResult:
    """SUSs sorted by start, plus the number of rank/select/RmQ calls made."""

    intervals: List[Interval]
    probes: int = field(default=0, compare=False)

    @property
    def occ(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)


class IntervalSusIndex:
    def __init__(self, mus: MusIndex, rmq: Optional[RangeQuery] = None):
        if rmq is None:
            rmq = RangeQuery.build(mus.length, mus.m, MIN)
        elif rmq.length != mus.m or rmq.mode != MIN:
            raise ValueError("RmQ directory does not match the MUS index")
        self.mus = mus
        self.rmq = rmq
        self.n = mus.n

    @property
    def m(self) -> int:
        return self.mus.m

    def _candidates(self, s: int, t: int):
        """Shared front half of the query.

        Returns ``(contained, lam, left, right, lo, hi, mid, probes)`` where
        ``lo..hi`` is the ordinal range of MUSs strictly straddling
        ``[s, t]`` and ``mid`` the RmQ answer on it (``None`` if empty).
        """
        if not 1 <= s <= t <= self.n:
            raise IndexError(f"invalid query interval [{s}, {t}] for text length {self.n}")
        mb, me = self.mus.mb, self.mus.me
        m = self.mus.m
        probes = 1
        lidx = me.rank1(t)
        probes += 1
        r = mb.rank1(s - 1) + 1
        left = right = None
        if lidx:
            probes += 1
            ls = mb.select1(lidx)
            if ls >= s:
                return True, t - s + 1, None, None, 0, -1, None, probes
            left = Interval(ls, t)
        if r <= m:
            probes += 1
            right = Interval(s, me.select1(r))
        lam = min(c.length for c in (left, right) if c is not None) if (left or right) else None
        lo, hi = lidx + 1, r - 1
        mid = None
        if lo <= hi:
            probes += 1
            mid = self.rmq.query(lo, hi)
            probes += 2
            mlen = me.select1(mid) - mb.select1(mid) + 1
            lam = mlen if lam is None else min(lam, mlen)
        return False, lam, left, right, lo, hi, mid, probes

    def query(self, s: int, t: int) -> QueryResult:
        """All shortest unique substrings containing ``[s, t]``."""
        contained, lam, left, right, lo, hi, mid, probes = self._candidates(s, t)
        if contained:
            return QueryResult([Interval(s, t)], probes)
        out = []
        if left is not None and left.length == lam:
            out.append(left)
        if mid is not None:
            probes = self._collect(lo, hi, mid, lam, out, probes)
        if right is not None and right.length == lam:
            out.append(right)
        out.sort()
        return QueryResult(out, probes)

    def _collect(self, lo: int, hi: int, first: int, lam: int, out: list, probes: int) -> int:
        mb, me = self.mus.mb, self.mus.me
        stack = [(lo, hi, first)]
        while stack:
            a, b, k = stack.pop()
            if k is None:
                probes += 1
                k = self.rmq.query(a, b)
            probes += 2
            st, en = mb.select1(k), me.select1(k)
            if en - st + 1 != lam:
                continue
            out.append(Interval(st, en))
            if k + 1 <= b:
                stack.append((k + 1, b, None))
            if a <= k - 1:
                stack.append((a, k - 1, None))
        return probes

    def sus_length(self, s: int, t: int) -> int:
        """Length shared by every SUS of ``[s, t]``, without enumerating them."""
        return self._candidates(s, t)[1]

    def length_at(self, p: int) -> int:
        """Length of any SUS containing position ``p``."""
        return self._candidates(p, p)[1]

    @property
    def payload_bits(self) -> int:
        return self.mus.payload_bits + self.rmq.payload_bits

    @property
    def aux_bits(self) -> int:
        return self.mus.aux_bits + self.rmq.aux_bits

    @property
    def total_bits(self) -> int:
        return self.payload_bits + self.aux_bits
