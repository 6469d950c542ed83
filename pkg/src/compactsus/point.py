"""Point SUS queries from the SUS-length differences and meaningful MUS starts.

The index stores ``length1 = L[1]``, the ternary sequence
``diff[i] = L[i] - L[i-1]`` (``diff[1] = 0``) and the bit vector
``mus_begin`` marking starts of meaningful MUSs, where ``L[p]`` is the
length of any SUS containing ``p``.  Neither the text nor the MUS markers
are needed at query time.
"""

from __future__ import annotations

from typing import List, Optional

import numpy as np

from .bitseq import BitVector, TernarySeq
from .interval import IntervalSusIndex, QueryResult
from .mus import Interval, MusIndex
from .rangequery import MAX, RangeQuery
from .report import BuildReport


class PointSusIndex:
    def __init__(self, diff: TernarySeq, length1: int, mus_begin: BitVector, m: int = 0):
        if len(diff) != len(mus_begin):
            raise ValueError("diff and mus_begin must cover the same text length")
        if diff[1] != 0:
            raise ValueError("diff[1] must be 0")
        if not 1 <= length1 <= len(diff):
            raise ValueError("length1 out of range")
        self.diff = diff
        self.length1 = int(length1)
        self.mus_begin = mus_begin
        self.n = len(diff)
        self.m = int(m)

    # -- construction -------------------------------------------------------

    @classmethod
    def build(cls, mus: MusIndex, ivs: IntervalSusIndex,
              report: Optional[BuildReport] = None,
              release_interval: bool = False) -> "PointSusIndex":
        """Build in the low-space order: lengths first, then MUSbegin.

        ``release_interval`` says the caller drops ``ivs`` once the lengths
        are known, which only changes the working-space report.
        """
        if ivs.mus is not mus and ivs.mus != mus:
            raise ValueError("interval index was built over different MUS markers")
        n = mus.n
        rep = report if report is not None else BuildReport(n)

        length_at = ivs.length_at
        diff = np.zeros(n, dtype=np.int8)
        length1 = prev = length_at(1)
        for p in range(2, n + 1):
            cur = length_at(p)
            d = cur - prev
            if d not in (-1, 0, 1):
                raise AssertionError(f"SUS lengths jump by {d} at position {p}")
            diff[p - 1] = d
            prev = cur
        rep.hold("LENGTH_DIFF (raw)", 8 * diff.nbytes)
        rep.hold("LENGTH[1]", 64)
        rep.stage("construct LENGTH_DIFF and LENGTH[1]")

        if release_interval:
            rep.release("RmQ on MUSlen")
            rep.stage("free RmQ on MUSlen")

        tern = TernarySeq(diff)
        rep.hold("LENGTH_DIFF rank/select", tern.payload_bits + tern.aux_bits)
        rep.stage("construct rank/select over LENGTH_DIFF")
        del diff
        rep.release("LENGTH_DIFF (raw)")
        rep.stage("free raw LENGTH_DIFF")

        partial = cls(tern, length1, BitVector(np.zeros(n, dtype=np.uint8)), mus.m)
        rmax = RangeQuery.build(partial.length_at, n, MAX)
        rep.hold("RMQ on LENGTH", rmax.total_bits)
        rep.stage("construct RMQ on LENGTH")

        begin = np.zeros(n, dtype=np.uint8)
        starts, ends = mus.starts().tolist(), mus.ends().tolist()
        for b, e in zip(starts, ends):
            x = rmax.query(b, e)
            lx = partial.length_at(x)
            if lx > e - b + 1:
                raise AssertionError(f"SUS length {lx} exceeds MUS [{b},{e}]")
            if lx == e - b + 1:
                begin[b - 1] = 1
        mus_begin = BitVector(begin)
        rep.hold("MUSbegin", mus_begin.payload_bits + mus_begin.aux_bits)
        rep.stage("construct MUSbegin")
        del rmax
        rep.release("RMQ on LENGTH")
        rep.stage("free RMQ on LENGTH")
        return cls(tern, length1, mus_begin, mus.m)

    # -- primitives ---------------------------------------------------------

    def _check(self, p: int) -> None:
        if not 1 <= p <= self.n:
            raise IndexError(f"position {p} out of range 1..{self.n}")

    def length_at(self, i: int) -> int:
        self._check(i)
        d = self.diff
        return self.length1 + d.plus.rank1(i) - d.minus.rank1(i)

    def lengths(self) -> np.ndarray:
        """The whole SUS-length array, 0-based."""
        return self.length1 + np.cumsum(self.diff.to_array(), dtype=np.int64)

    def pred_neq(self, q: int) -> Optional[int]:
        """Nearest ``i < q`` with ``L[i] != L[q]``."""
        self._check(q)
        best = None
        for vec in (self.diff.minus, self.diff.plus):
            r = vec.rank1(q)
            if r:
                cand = vec.select1(r) - 1
                if best is None or cand > best:
                    best = cand
        return best

    def succ_neq(self, q: int) -> Optional[int]:
        """Nearest ``i > q`` with ``L[i] != L[q]``."""
        self._check(q)
        best = None
        for vec in (self.diff.minus, self.diff.plus):
            cand = vec.select1(vec.rank1(q) + 1)
            if cand is not None and (best is None or cand < best):
                best = cand
        return best

    def pred_meaningful_start(self, q: int) -> Optional[int]:
        return self.mus_begin.pred(q)

    def succ_meaningful_start(self, q: int) -> Optional[int]:
        return self.mus_begin.succ(q)

    # -- leftmost / rightmost -----------------------------------------------

    def leftmost_sus(self, p: int) -> Interval:
        self._check(p)
        lp = self.length_at(p)
        b = self.succ_meaningful_start(max(1, p - lp + 1))
        if b is None or b > min(p + lp - 1, self.n):
            raise AssertionError(f"no meaningful MUS start near position {p}")
        if b >= p:
            return Interval(p, p + lp - 1)
        q = self.pred_neq(p)
        if q is not None and q >= p - lp + 1 and self.length_at(q) > lp:
            return Interval(q + 1, q + lp)
        return Interval(b, b + lp - 1)

    def rightmost_sus(self, p: int) -> Interval:
        self._check(p)
        lp = self.length_at(p)
        q = self.succ_neq(p)
        if q is not None:
            lq = self.length_at(q)
            if q == p + 1 and lq < lp:
                return Interval(p, p + lp - 1)
            if q <= p + lp - 1 and lq > lp:
                return Interval(q - lp, q - 1)
        b = self.pred_meaningful_start(p)
        if b is None:
            raise AssertionError(f"no meaningful MUS starts at or before {p}")
        return Interval(b, b + lp - 1)

    # -- queries ------------------------------------------------------------

    # rank/select calls behind each primitive, for the probe tally
    _COST_LENGTH = 2
    _COST_NEQ = 4
    _COST_MEANINGFUL = 2

    def query(self, p: int) -> QueryResult:
        """All shortest unique substrings containing position ``p``."""
        left = self.leftmost_sus(p)
        right = self.rightmost_sus(p)
        probes = 2 * (2 * self._COST_LENGTH + self._COST_NEQ + self._COST_MEANINGFUL)
        if left == right:
            return QueryResult([left], probes)
        lp = left.length
        out: List[Interval] = [left]
        mb = self.mus_begin
        s = left.start
        stop = right.start
        while True:
            probes += 2
            s = mb.select1(mb.rank1(s) + 1)
            if s is None or s >= stop:
                break
            out.append(Interval(s, s + lp - 1))
        out.append(right)
        return QueryResult(out, probes)

    def count(self, p: int) -> int:
        """Number of SUSs containing ``p``, without listing them."""
        left = self.leftmost_sus(p)
        right = self.rightmost_sus(p)
        if left == right:
            return 1
        mb = self.mus_begin
        return mb.rank1(right.start - 1) - mb.rank1(left.start) + 2

    # -- sizes --------------------------------------------------------------

    @property
    def payload_bits(self) -> int:
        return self.diff.payload_bits + 64 + self.mus_begin.payload_bits

    @property
    def aux_bits(self) -> int:
        return self.diff.aux_bits + self.mus_begin.aux_bits

    @property
    def total_bits(self) -> int:
        return self.payload_bits + self.aux_bits
