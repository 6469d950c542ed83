"""Static range-minimum / range-maximum queries that do not keep the values.

The array ``Z[1..n]`` is turned into the balanced-parentheses encoding of
its left-to-right min-heap: node 0 is a virtual root and the parent of
``k`` is the nearest ``j < k`` with ``Z[j] <= Z[k]`` (``>=`` for MAX).
Nodes appear in preorder, so node ``k`` opens at the ``(k+1)``-th ``1``.
For ``i < j`` the leftmost extremum of ``Z[i..j]`` is the rightmost node of
minimum depth among ``i..j``, which a range-min over the excess sequence of
the parentheses locates.  After the build only the parentheses (plus small
block directories) remain.

Excess range-min: blocks of ``block_bits`` parentheses, each with its
minimum excess relative to the block start and the offset of the rightmost
position reaching it, and a sparse table over blocks.  Inside a block the
scan goes byte by byte through lookup tables.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence, Union

import numpy as np

from .bitseq import BitVector

MIN = "min"
MAX = "max"

Accessor = Union[Callable[[int], int], Sequence[int], np.ndarray]


def _byte_tables():
    delta, low, where = [], [], []
    for v in range(256):
        e, mn, arg = 0, 9, -1
        for t in range(8):
            e += 1 if (v >> t) & 1 else -1
            if e <= mn:
                mn, arg = e, t
        delta.append(e)
        low.append(mn)
        where.append(arg)
    return delta, low, where


_DELTA, _LOW, _WHERE = _byte_tables()


def _block_bits_for(nbits: int) -> int:
    lg = max(1.0, math.log2(nbits))
    return max(256, 64 * math.ceil(lg * lg / 64))


class RangeQuery:
    """Leftmost-extremum range query over ``Z[1..n]`` in ``O(n)`` bits."""

    def __init__(self, bp: BitVector, mode: str = MIN):
        if mode not in (MIN, MAX):
            raise ValueError(f"mode must be {MIN!r} or {MAX!r}")
        if len(bp) < 4 or len(bp) % 2 or 2 * bp.ones != len(bp):
            raise ValueError("not a balanced parentheses sequence")
        self.bp = bp
        self.mode = mode
        self.length = bp.ones - 1
        self._bytes = memoryview(bp.words).cast("B")
        self._index_blocks()

    # -- construction -------------------------------------------------------

    @classmethod
    def build(cls, accessor: Accessor, length: int, mode: str = MIN) -> "RangeQuery":
        """Build over ``Z[k] = accessor(k)`` for ``k = 1..length``.

        ``accessor`` may also be a sequence holding ``Z[1..length]`` at
        offsets ``0..length-1``.  It is read once per index and not kept.
        """
        if length < 1:
            raise ValueError("range query domain must be non-empty")
        if mode not in (MIN, MAX):
            raise ValueError(f"mode must be {MIN!r} or {MAX!r}")
        if callable(accessor):
            values = map(accessor, range(1, length + 1))
        else:
            if len(accessor) < length:
                raise ValueError("accessor shorter than domain")
            seq = accessor[:length]
            values = seq.tolist() if isinstance(seq, np.ndarray) else seq
        return cls(_heap_parentheses(values, length, mode), mode)

    @classmethod
    def from_values(cls, values: Sequence[int], mode: str = MIN) -> "RangeQuery":
        return cls.build(values, len(values), mode)

    def _index_blocks(self) -> None:
        nbits = len(self.bp)
        bsz = _block_bits_for(nbits)
        nblocks = -(-nbits // bsz)
        bits = self.bp.to_array().astype(np.int32)
        exc = np.cumsum(2 * bits - 1, dtype=np.int32)
        padded = np.full(nblocks * bsz, np.iinfo(np.int32).max, dtype=np.int32)
        padded[:nbits] = exc
        padded = padded.reshape(nblocks, bsz)
        before = np.zeros(nblocks, dtype=np.int32)
        before[1:] = exc[np.arange(1, nblocks) * bsz - 1]
        mins = padded.min(axis=1)
        rightmost = bsz - 1 - np.argmin(padded[:, ::-1], axis=1)

        idx_dtype = np.uint16 if nblocks <= 1 << 16 else np.uint32
        levels = []
        prev = np.arange(nblocks)
        prev_min = mins
        width = 1
        while 2 * width <= nblocks:
            a = prev[: nblocks - 2 * width + 1]
            b = prev[width : nblocks - width + 1]
            ma = prev_min[: nblocks - 2 * width + 1]
            mb = prev_min[width : nblocks - width + 1]
            take_b = mb <= ma
            cur = np.where(take_b, b, a)
            cur_min = np.where(take_b, mb, ma)
            levels.append(cur.astype(idx_dtype))
            prev, prev_min = cur, cur_min
            width *= 2

        self._bsz = bsz
        self._nblocks = nblocks
        self._rel_min = (mins - before).astype(np.int16)
        self._arg = rightmost.astype(np.uint16)
        self._levels = levels
        self._rm = memoryview(self._rel_min).cast("B").cast("h")
        self._ra = memoryview(self._arg).cast("B").cast("H")
        self._lv = [memoryview(lv).cast("B").cast(lv.dtype.char) for lv in levels]

    # -- sizes --------------------------------------------------------------

    @property
    def payload_bits(self) -> int:
        return self.bp.payload_bits

    @property
    def aux_bits(self) -> int:
        table = sum(lv.nbytes for lv in self._levels)
        return self.bp.aux_bits + 8 * (self._rel_min.nbytes + self._arg.nbytes + table)

    @property
    def total_bits(self) -> int:
        return self.payload_bits + self.aux_bits

    def __len__(self) -> int:
        return self.length

    # -- queries ------------------------------------------------------------

    def query(self, i: int, j: int) -> int:
        """Index of the leftmost minimum (or maximum) of ``Z[i..j]``."""
        if not 1 <= i <= j <= self.length:
            raise IndexError(f"invalid range [{i}, {j}] for domain 1..{self.length}")
        if i == j:
            return i
        bp = self.bp
        oi = bp.select1(i + 1)
        oj = bp.select1(j + 1)
        base = 2 * bp.rank1(oi) - oi
        z, low = self._excess_min(oi, oj, base)
        if low == base:
            return i
        return bp.rank1(z + 1) - 1

    __call__ = query

    def _excess(self, p: int) -> int:
        return 2 * self.bp.rank1(p) - p

    def _excess_min(self, a: int, b: int, e_a: int):
        """Rightmost position of minimum excess in ``[a, b]`` and its value.

        ``e_a`` is the excess at position ``a``.
        """
        bsz = self._bsz
        ba = (a - 1) // bsz
        bb = (b - 1) // bsz
        if ba == bb:
            return self._scan(a, b, e_a)
        pos, low = self._scan(a, (ba + 1) * bsz, e_a)
        if bb - ba > 1:
            blk = self._block_range_min(ba + 1, bb - 1)
            start = blk * bsz
            val = self._excess(start) + self._rm[blk]
            if val <= low:
                pos, low = start + 1 + self._ra[blk], val
        start = bb * bsz
        rpos, rlow = self._scan(start + 1, b, self._excess(start + 1))
        if rlow <= low:
            pos, low = rpos, rlow
        return pos, low

    def _block_range_min(self, u: int, v: int) -> int:
        if u == v:
            return u
        k = (v - u + 1).bit_length() - 1
        lv = self._lv[k - 1]
        c1, c2 = lv[u], lv[v - (1 << k) + 1]
        bsz = self._bsz
        m1 = self._excess(c1 * bsz) + self._rm[c1]
        m2 = self._excess(c2 * bsz) + self._rm[c2]
        if m1 < m2 or (m1 == m2 and c1 > c2):
            return c1
        return c2

    def _scan(self, a: int, b: int, e_a: int):
        """Rightmost minimum of excess over ``[a, b]`` by direct bit scan."""
        by = self._bytes
        best_pos, best = a, e_a
        e = e_a
        p = a + 1
        # bit-wise until byte aligned (position p-1 is 0-based bit index)
        while p <= b and (p - 1) & 7:
            e += 1 if (by[(p - 1) >> 3] >> ((p - 1) & 7)) & 1 else -1
            if e <= best:
                best, best_pos = e, p
            p += 1
        while p + 7 <= b:
            v = by[(p - 1) >> 3]
            low = e + _LOW[v]
            if low <= best:
                best, best_pos = low, p + _WHERE[v]
            e += _DELTA[v]
            p += 8
        while p <= b:
            e += 1 if (by[(p - 1) >> 3] >> ((p - 1) & 7)) & 1 else -1
            if e <= best:
                best, best_pos = e, p
            p += 1
        return best_pos, best


def _heap_parentheses(values, length: int, mode: str) -> BitVector:
    opens = [0]
    pos = 1
    stack: list = []
    push = stack.append
    pop = stack.pop
    mark = opens.append
    if mode == MIN:
        for v in values:
            while stack and stack[-1] > v:
                pop()
                pos += 1
            push(v)
            mark(pos)
            pos += 1
    else:
        for v in values:
            while stack and stack[-1] < v:
                pop()
                pos += 1
            push(v)
            mark(pos)
            pos += 1
    if len(opens) != length + 1:
        raise ValueError("accessor produced the wrong number of values")
    bits = np.zeros(2 * length + 2, dtype=np.uint8)
    bits[opens] = 1
    return BitVector(bits)
