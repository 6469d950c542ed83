"""Suffix array and the arrays derived from it.

These are construction-time structures only.  All arrays here carry an
unused slot at index 0 so that ``ctx.sa[i]`` is the ``i``-th entry in
1-based terms; position ``0`` doubles as the nil sentinel in
``rank_prev`` / ``rank_next``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .bitseq import BitVector

NIL = 0

TextLike = Union[bytes, bytearray, str, Sequence[int], np.ndarray]


@dataclass(frozen=True)
class Text:
    symbols: np.ndarray  # 0-based storage of T[1..n]

    @property
    def n(self) -> int:
        return int(self.symbols.size)

    @property
    def sigma(self) -> int:
        return int(np.unique(self.symbols).size)

    def __len__(self) -> int:
        return self.n

    def substring(self, i: int, j: int) -> np.ndarray:
        """``T[i..j]`` (1-based, inclusive)."""
        return self.symbols[i - 1 : j]


def as_text(text: Union[TextLike, Text]) -> Text:
    """Normalize bytes, ``str`` or an integer sequence into a :class:`Text`."""
    if isinstance(text, Text):
        return text
    if isinstance(text, (bytes, bytearray)):
        arr = np.frombuffer(bytes(text), dtype=np.uint8).astype(np.int64)
    elif isinstance(text, str):
        arr = np.fromiter((ord(c) for c in text), dtype=np.int64, count=len(text))
    else:
        arr = np.asarray(text)
        if arr.ndim != 1 or (arr.size and not np.issubdtype(arr.dtype, np.integer)):
            raise ValueError("text must be a one-dimensional integer sequence")
        arr = arr.astype(np.int64)
    if arr.size == 0:
        raise ValueError("empty text")
    return Text(arr)


@dataclass
class SuffixContext:
    """SA, ISA, LCP, PLCP, RankPrev (Phi) and RankNext of one text."""

    text: Text
    sa: np.ndarray
    isa: np.ndarray
    lcp: np.ndarray  # indices 1..n+1
    plcp: np.ndarray
    rank_prev: np.ndarray
    rank_next: np.ndarray

    @property
    def n(self) -> int:
        return self.text.n

    @property
    def nbytes(self) -> int:
        return sum(a.nbytes for a in (self.sa, self.isa, self.lcp, self.plcp,
                                      self.rank_prev, self.rank_next))


def suffix_array(text: Union[TextLike, Text]) -> np.ndarray:
    """Suffix array by prefix doubling, returned 0-padded (``sa[1..n]``)."""
    sym = as_text(text).symbols
    n = sym.size
    _, rank = np.unique(sym, return_inverse=True)
    rank = rank.astype(np.int64) + 1
    k = 1
    while True:
        second = np.zeros(n, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        r1, r2 = rank[sa], second[sa]
        step = np.empty(n, dtype=np.int64)
        step[0] = 1
        step[1:] = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.cumsum(step)
        rank = new_rank
        if rank.max() == n:
            break
        k *= 2
    out = np.zeros(n + 1, dtype=np.int64)
    out[1:] = sa + 1
    return out


def plcp_from_phi(text: Union[TextLike, Text], rank_prev: np.ndarray) -> np.ndarray:
    """PLCP by the Phi method: ``plcp[i+1] >= plcp[i] - 1`` bounds the rescans."""
    t = as_text(text).symbols.tolist()
    n = len(t)
    phi = rank_prev.tolist()
    out = [0] * (n + 1)
    h = 0
    for i in range(1, n + 1):
        j = phi[i]
        if j == NIL:
            h = 0
        else:
            a, b = i - 1 + h, j - 1 + h
            while a < n and b < n and t[a] == t[b]:
                a += 1
                b += 1
            h = a - (i - 1)
        out[i] = h
        if h:
            h -= 1
    return np.asarray(out, dtype=np.int64)


def build_suffix_context(text: Union[TextLike, Text]) -> SuffixContext:
    t = as_text(text)
    n = t.n
    sa = suffix_array(t)
    isa = np.zeros(n + 1, dtype=np.int64)
    isa[sa[1:]] = np.arange(1, n + 1)
    rank_prev = np.zeros(n + 1, dtype=np.int64)
    rank_prev[sa[2:]] = sa[1:n]
    rank_next = np.zeros(n + 1, dtype=np.int64)
    rank_next[sa[1:n]] = sa[2:]
    plcp = plcp_from_phi(t, rank_prev)
    lcp = np.zeros(n + 2, dtype=np.int64)
    lcp[isa[1:]] = plcp[1:]
    lcp[1] = 0
    return SuffixContext(t, sa, isa, lcp, plcp, rank_prev, rank_next)


class SuccinctPlcp:
    """PLCP in ``2n`` bits: the ``i``-th one sits at ``2i + PLCP[i]``."""

    def __init__(self, bits: BitVector):
        if len(bits) % 2 or bits.ones != len(bits) // 2:
            raise ValueError("succinct PLCP needs exactly n ones in 2n bits")
        self.bits = bits
        self.n = len(bits) // 2

    @classmethod
    def from_plcp(cls, plcp: np.ndarray) -> "SuccinctPlcp":
        n = plcp.size - 1
        pos = 2 * np.arange(1, n + 1) + plcp[1:]
        return cls(BitVector.from_positions(pos, 2 * n))

    def access(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} out of range 1..{self.n}")
        return self.bits.select1(i) - 2 * i

    __getitem__ = access

    def access_many(self, positions) -> np.ndarray:
        i = np.asarray(positions, dtype=np.int64)
        return self.bits.select1_many(i) - 2 * i

    def to_array(self) -> np.ndarray:
        """0-padded plain PLCP (``out[1..n]``)."""
        out = np.zeros(self.n + 1, dtype=np.int64)
        out[1:] = self.access_many(np.arange(1, self.n + 1))
        return out

    @property
    def total_bits(self) -> int:
        return self.bits.payload_bits + self.bits.aux_bits


def build_succinct_plcp(ctx: SuffixContext) -> SuccinctPlcp:
    return SuccinctPlcp.from_plcp(ctx.plcp)
