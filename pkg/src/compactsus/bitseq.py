"""Static bit and ternary sequences with rank/select.

Positions are 1-based: ``rank1(i)`` counts set bits among positions ``1..i``
and ``select1(k)`` returns the position of the ``k``-th set bit.  ``None``
stands for "no such position".

Layout of :class:`BitVector`::

    words    little-endian uint64 payload, bit p-1 of the vector is bit
             (p-1) % 64 of word (p-1) // 64
    super    cumulative popcount before every 2048-bit superblock (int64)
    block    popcount from the enclosing superblock start to every
             256-bit block start (uint16)
    samples  superblock holding every 1024-th set bit (int64)
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Optional, Sequence

import numpy as np

SUPER_BITS = 2048
BLOCK_BITS = 256
WORDS_PER_BLOCK = BLOCK_BITS // 64
BLOCKS_PER_SUPER = SUPER_BITS // BLOCK_BITS
SELECT_SAMPLE = 1024

_WORD_MASK = (1 << 64) - 1


def _select_in_word(word: int, r: int) -> int:
    """0-based offset of the r-th (1-based) set bit of ``word``."""
    for _ in range(r - 1):
        word &= word - 1
    return (word & -word).bit_length() - 1


def _as_bit_array(bits) -> np.ndarray:
    if isinstance(bits, str):
        arr = np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
    else:
        arr = np.asarray(bits if isinstance(bits, (np.ndarray, Sequence)) else list(bits))
    if arr.ndim != 1:
        raise ValueError("bit sequence must be one-dimensional")
    if arr.dtype != np.bool_:
        if arr.size and (arr.min() < 0 or arr.max() > 1):
            raise ValueError("bit sequence may only contain 0 and 1")
    return arr.astype(np.uint8, copy=False)


class BitVector:
    """Immutable bit array with constant-time rank and select."""

    __slots__ = (
        "_len", "_ones", "_words", "_super", "_block", "_samples",
        "_w", "_s", "_b", "_smp",
    )

    def __init__(self, bits: Iterable[int] | np.ndarray | str):
        arr = _as_bit_array(bits)
        if arr.size == 0:
            raise ValueError("empty sequence")
        packed = np.packbits(arr, bitorder="little")
        self._setup(packed, arr.size)

    @classmethod
    def from_words(cls, words: np.ndarray, length: int) -> "BitVector":
        """Rebuild from a packed payload (as produced by :attr:`words`)."""
        if length < 1:
            raise ValueError("empty sequence")
        nbytes = (length + 7) // 8
        raw = np.ascontiguousarray(words, dtype="<u8").view(np.uint8)
        if raw.size < nbytes:
            raise ValueError("payload shorter than declared length")
        packed = raw[:nbytes].copy()
        tail = length & 7
        if tail:
            packed[-1] &= (1 << tail) - 1
        obj = cls.__new__(cls)
        obj._setup(packed, length)
        return obj

    @classmethod
    def from_positions(cls, positions, length: int) -> "BitVector":
        """Bit vector of ``length`` with ones at the given 1-based positions."""
        arr = np.zeros(length, dtype=np.uint8)
        pos = np.asarray(positions, dtype=np.int64)
        if pos.size:
            if pos.min() < 1 or pos.max() > length:
                raise IndexError("set-bit position out of range")
            arr[pos - 1] = 1
        return cls(arr)

    def _setup(self, packed: np.ndarray, length: int) -> None:
        nblocks = -(-length // BLOCK_BITS)
        padded = np.zeros(nblocks * (BLOCK_BITS // 8), dtype=np.uint8)
        padded[: packed.size] = packed
        words = padded.view("<u8")
        block_pop = np.bitwise_count(words).reshape(nblocks, WORDS_PER_BLOCK).sum(axis=1)
        cum = np.zeros(nblocks + 1, dtype=np.int64)
        np.cumsum(block_pop, out=cum[1:])

        nsuper = (length >> 11) + 1
        sup = cum[np.arange(nsuper) * BLOCKS_PER_SUPER]
        nb = (length >> 8) + 1
        bidx = np.arange(nb)
        blk = (cum[bidx] - sup[bidx // BLOCKS_PER_SUPER]).astype(np.uint16)

        ones = int(cum[-1])
        ks = np.arange(0, ones, SELECT_SAMPLE, dtype=np.int64) + 1
        samples = (np.searchsorted(sup, ks, side="left") - 1).astype(np.int64)

        self._len = length
        self._ones = ones
        self._words = words
        self._super = sup
        self._block = blk
        self._samples = samples
        self._w = memoryview(words).cast("B").cast("Q")
        self._s = memoryview(sup).cast("B").cast("q")
        self._b = memoryview(blk).cast("B").cast("H")
        self._smp = memoryview(samples).cast("B").cast("q") if samples.size else ()

    # -- basic properties -------------------------------------------------

    def __len__(self) -> int:
        return self._len

    @property
    def ones(self) -> int:
        return self._ones

    @property
    def zeros(self) -> int:
        return self._len - self._ones

    @property
    def words(self) -> np.ndarray:
        """Packed payload, trimmed to ``ceil(len / 64)`` words."""
        return self._words[: -(-self._len // 64)]

    @property
    def payload_bits(self) -> int:
        return self._len

    @property
    def aux_bits(self) -> int:
        return 8 * (self._super.nbytes + self._block.nbytes + self._samples.nbytes)

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self._len:
            raise IndexError(f"position {i} out of range 1..{self._len}")
        i -= 1
        return (self._w[i >> 6] >> (i & 63)) & 1

    def to_array(self) -> np.ndarray:
        """Bits as a uint8 array (0-based)."""
        return np.unpackbits(self._words.view(np.uint8), bitorder="little")[: self._len]

    def one_positions(self) -> np.ndarray:
        """1-based positions of all set bits, ascending."""
        return np.flatnonzero(self.to_array()).astype(np.int64) + 1

    def __iter__(self):
        return iter(self.to_array().tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._len == other._len and np.array_equal(self.words, other.words)

    def __repr__(self) -> str:
        if self._len <= 64:
            body = "".join(map(str, self.to_array().tolist()))
            return f"BitVector({body!r})"
        return f"BitVector(len={self._len}, ones={self._ones})"

    # -- rank ---------------------------------------------------------------

    def rank1(self, i: int) -> int:
        """Number of set bits among positions ``1..i`` (``0 <= i <= len``)."""
        if not 0 <= i <= self._len:
            raise IndexError(f"rank argument {i} out of range 0..{self._len}")
        b = i >> 8
        r = self._s[i >> 11] + self._b[b]
        w = self._w
        wi = i >> 6
        for k in range(b * WORDS_PER_BLOCK, wi):
            r += w[k].bit_count()
        rem = i & 63
        if rem:
            r += (w[wi] & ((1 << rem) - 1)).bit_count()
        return r

    def rank0(self, i: int) -> int:
        return i - self.rank1(i)

    def rank(self, c: int, i: int) -> int:
        if c == 1:
            return self.rank1(i)
        if c == 0:
            return self.rank0(i)
        raise ValueError("bit symbol must be 0 or 1")

    def rank1_many(self, positions) -> np.ndarray:
        """Vectorized :meth:`rank1` over an integer array."""
        i = np.asarray(positions, dtype=np.int64)
        if i.size and (i.min() < 0 or i.max() > self._len):
            raise IndexError("rank argument out of range")
        b = i >> 8
        r = self._super[i >> 11] + self._block[b].astype(np.int64)
        words = self._words
        base = b * WORDS_PER_BLOCK
        wi = i >> 6
        nwords = words.size
        for off in range(WORDS_PER_BLOCK):
            k = base + off
            full = k < wi
            kk = np.minimum(k, nwords - 1)
            r += np.where(full, np.bitwise_count(words[kk]), 0)
        rem = (i & 63).astype(np.uint64)
        wk = np.minimum(wi, nwords - 1)
        mask = (np.uint64(1) << rem) - np.uint64(1)
        part = np.bitwise_count(words[wk] & mask).astype(np.int64)
        r += np.where(rem > 0, part, 0)
        return r

    # -- select -------------------------------------------------------------

    def select1(self, k: int) -> Optional[int]:
        """Position of the ``k``-th set bit, or ``None`` if there is none."""
        if k < 1 or k > self._ones:
            return None
        j = (k - 1) >> 10
        lo = self._smp[j]
        hi = self._smp[j + 1] + 1 if j + 1 < len(self._smp) else len(self._s)
        sb = bisect_left(self._s, k, lo, hi) - 1
        rem = k - self._s[sb]
        blk = self._b
        b = sb * BLOCKS_PER_SUPER
        bend = min(b + BLOCKS_PER_SUPER, len(blk))
        while b + 1 < bend and blk[b + 1] < rem:
            b += 1
        rem -= blk[b]
        w = self._w
        k_word = b * WORDS_PER_BLOCK
        while True:
            pc = w[k_word].bit_count()
            if pc >= rem:
                return k_word * 64 + _select_in_word(w[k_word], rem) + 1
            rem -= pc
            k_word += 1

    def select0(self, k: int) -> Optional[int]:
        """Position of the ``k``-th zero bit, or ``None``."""
        if k < 1 or k > self._len - self._ones:
            return None
        s = self._s
        lo, hi = 0, len(s)
        while hi - lo > 1:
            mid = (lo + hi) >> 1
            if mid * SUPER_BITS - s[mid] < k:
                lo = mid
            else:
                hi = mid
        sb = lo
        rem = k - (sb * SUPER_BITS - s[sb])
        blk = self._b
        b = sb * BLOCKS_PER_SUPER
        bend = min(b + BLOCKS_PER_SUPER, len(blk))
        while b + 1 < bend and ((b + 1 - sb * BLOCKS_PER_SUPER) * BLOCK_BITS - blk[b + 1]) < rem:
            b += 1
        rem -= (b - sb * BLOCKS_PER_SUPER) * BLOCK_BITS - blk[b]
        w = self._w
        k_word = b * WORDS_PER_BLOCK
        while True:
            inv = ~w[k_word] & _WORD_MASK
            pc = inv.bit_count()
            if pc >= rem:
                return k_word * 64 + _select_in_word(inv, rem) + 1
            rem -= pc
            k_word += 1

    def select(self, c: int, k: int) -> Optional[int]:
        if c == 1:
            return self.select1(k)
        if c == 0:
            return self.select0(k)
        raise ValueError("bit symbol must be 0 or 1")

    def select1_many(self, ordinals) -> np.ndarray:
        """Vectorized :meth:`select1`; every ordinal must be in ``1..ones``."""
        k = np.asarray(ordinals, dtype=np.int64)
        if k.size and (k.min() < 1 or k.max() > self._ones):
            raise IndexError("select ordinal out of range")
        return self.one_positions()[k - 1]

    # -- predecessor / successor --------------------------------------------

    def pred(self, d: int) -> Optional[int]:
        """Largest set position ``<= d``."""
        if not 1 <= d <= self._len:
            raise IndexError(f"position {d} out of range 1..{self._len}")
        r = self.rank1(d)
        return self.select1(r) if r else None

    def succ(self, d: int) -> Optional[int]:
        """Smallest set position ``>= d``."""
        if not 1 <= d <= self._len:
            raise IndexError(f"position {d} out of range 1..{self._len}")
        i = d - 1
        if (self._w[i >> 6] >> (i & 63)) & 1:
            return d
        return self.select1(self.rank1(d) + 1)


TERNARY_SYMBOLS = (-1, 0, 1)


class TernarySeq:
    """Sequence over ``{-1, 0, +1}`` backed by two bit vectors.

    One vector marks the ``-1`` entries, the other the ``+1`` entries; a
    zero is wherever neither is set.  Space is ``2 * len`` bits plus the
    rank/select directories of both vectors.
    """

    def __init__(self, symbols):
        arr = np.asarray(symbols if not isinstance(symbols, (str, bytes)) else list(symbols))
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("empty sequence")
        arr = arr.astype(np.int64, copy=False)
        if arr.min() < -1 or arr.max() > 1:
            raise ValueError("ternary symbols must be -1, 0 or +1")
        self._len = int(arr.size)
        self.minus = BitVector(arr == -1)
        self.plus = BitVector(arr == 1)

    @classmethod
    def from_bitvectors(cls, minus: BitVector, plus: BitVector) -> "TernarySeq":
        if len(minus) != len(plus):
            raise ValueError("component bit vectors differ in length")
        if np.any(minus.words & plus.words):
            raise ValueError("a position cannot be both -1 and +1")
        obj = cls.__new__(cls)
        obj._len = len(minus)
        obj.minus = minus
        obj.plus = plus
        return obj

    def __len__(self) -> int:
        return self._len

    def _vec(self, c: int) -> BitVector:
        if c == -1:
            return self.minus
        if c == 1:
            return self.plus
        raise ValueError("ternary symbol must be -1, 0 or +1")

    def __getitem__(self, i: int) -> int:
        return self.plus[i] - self.minus[i]

    def to_array(self) -> np.ndarray:
        return self.plus.to_array().astype(np.int8) - self.minus.to_array().astype(np.int8)

    def count(self, c: int) -> int:
        return self.rank(c, self._len)

    def rank(self, c: int, i: int) -> int:
        if c == 0:
            return i - self.minus.rank1(i) - self.plus.rank1(i)
        return self._vec(c).rank1(i)

    def select(self, c: int, k: int) -> Optional[int]:
        if c != 0:
            return self._vec(c).select1(k)
        if k < 1 or k > self.count(0):
            return None
        lo, hi = 1, self._len
        while lo < hi:
            mid = (lo + hi) >> 1
            if self.rank(0, mid) < k:
                lo = mid + 1
            else:
                hi = mid
        return lo

    @property
    def payload_bits(self) -> int:
        return self.minus.payload_bits + self.plus.payload_bits

    @property
    def aux_bits(self) -> int:
        return self.minus.aux_bits + self.plus.aux_bits
