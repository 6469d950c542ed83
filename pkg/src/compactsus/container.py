"""Binary index container.

Layout (all integers unsigned 64-bit little-endian)::

    magic      8 bytes  b"SUSIDX01"
    text_len   u64
    flags      u64      bit 0 MUSIX, bit 1 IVSUS, bit 2 PTSUS
    sections   repeated: tag (8 bytes, NUL padded) | body_len u64 | body
    checksum   u64      first 8 bytes of BLAKE2b over everything above

A bit vector inside a body is ``bit_len u64 | word_count u64 | words``.
Only payloads are stored; rank/select directories are rebuilt on load.

    MUSIX   bitvec MB, bitvec ME
    IVSUS   u64 m, bitvec parentheses of the RmQ over MUS lengths
    PTSUS   u64 LENGTH[1], u64 m, bitvec diff(-1), bitvec diff(+1), bitvec MUSbegin
"""

from __future__ import annotations

import hashlib
import io
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

import numpy as np

from .bitseq import BitVector, TernarySeq
from .interval import IntervalSusIndex
from .mus import MusIndex
from .point import PointSusIndex
from .rangequery import MIN, RangeQuery

MAGIC = b"SUSIDX01"
FLAG_MUSIX = 1
FLAG_IVSUS = 2
FLAG_PTSUS = 4
SECTION_FLAGS = {"MUSIX": FLAG_MUSIX, "IVSUS": FLAG_IVSUS, "PTSUS": FLAG_PTSUS}

_U64 = struct.Struct("<Q")


class ContainerError(ValueError):
    """Malformed, truncated or corrupted container."""


class MissingSectionError(LookupError):
    """The container lacks the section a query needs."""


@dataclass
class SusIndex:
    """The structures one container holds; any of them may be absent."""

    n: int
    mus: Optional[MusIndex] = None
    interval: Optional[IntervalSusIndex] = None
    point: Optional[PointSusIndex] = None

    @property
    def m(self) -> Optional[int]:
        if self.mus is not None:
            return self.mus.m
        if self.point is not None and self.point.m:
            return self.point.m
        return None

    def require_interval(self) -> IntervalSusIndex:
        if self.interval is None:
            raise MissingSectionError("index has no interval-SUS section (IVSUS)")
        return self.interval

    def require_point(self) -> PointSusIndex:
        if self.point is None:
            raise MissingSectionError("index has no point-SUS section (PTSUS)")
        return self.point

    @property
    def sections(self) -> Tuple[str, ...]:
        out = []
        if self.mus is not None:
            out.append("MUSIX")
        if self.interval is not None:
            out.append("IVSUS")
        if self.point is not None:
            out.append("PTSUS")
        return tuple(out)


def checksum(data: bytes) -> int:
    return _U64.unpack(hashlib.blake2b(data, digest_size=8).digest())[0]


def _put_bits(out: io.BytesIO, bv: BitVector) -> None:
    words = bv.words.astype("<u8", copy=False)
    out.write(_U64.pack(len(bv)))
    out.write(_U64.pack(words.size))
    out.write(words.tobytes())


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def u64(self) -> int:
        if self.pos + 8 > len(self.data):
            raise ContainerError("truncated container")
        (v,) = _U64.unpack_from(self.data, self.pos)
        self.pos += 8
        return v

    def take(self, k: int) -> bytes:
        if k < 0 or self.pos + k > len(self.data):
            raise ContainerError("truncated container")
        chunk = self.data[self.pos : self.pos + k]
        self.pos += k
        return chunk

    def bits(self) -> BitVector:
        length = self.u64()
        nwords = self.u64()
        if length < 1 or nwords != -(-length // 64):
            raise ContainerError("bit vector header inconsistent")
        words = np.frombuffer(self.take(8 * nwords), dtype="<u8")
        return BitVector.from_words(words, length)

    def done(self) -> bool:
        return self.pos == len(self.data)


def to_bytes(index: SusIndex) -> bytes:
    bodies: Dict[str, bytes] = {}
    if index.mus is not None:
        b = io.BytesIO()
        _put_bits(b, index.mus.mb)
        _put_bits(b, index.mus.me)
        bodies["MUSIX"] = b.getvalue()
    if index.interval is not None:
        if index.mus is None:
            raise ValueError("interval section needs the MUS section")
        b = io.BytesIO()
        b.write(_U64.pack(index.interval.rmq.length))
        _put_bits(b, index.interval.rmq.bp)
        bodies["IVSUS"] = b.getvalue()
    if index.point is not None:
        pt = index.point
        b = io.BytesIO()
        b.write(_U64.pack(pt.length1))
        b.write(_U64.pack(pt.m))
        _put_bits(b, pt.diff.minus)
        _put_bits(b, pt.diff.plus)
        _put_bits(b, pt.mus_begin)
        bodies["PTSUS"] = b.getvalue()

    out = io.BytesIO()
    out.write(MAGIC)
    out.write(_U64.pack(index.n))
    out.write(_U64.pack(sum(SECTION_FLAGS[k] for k in bodies)))
    for tag, body in bodies.items():
        out.write(tag.encode("ascii").ljust(8, b"\0"))
        out.write(_U64.pack(len(body)))
        out.write(body)
    data = out.getvalue()
    return data + _U64.pack(checksum(data))


def from_bytes(data: bytes) -> SusIndex:
    if len(data) < len(MAGIC) + 24:
        raise ContainerError("file too short to be an index container")
    if data[:8] != MAGIC:
        raise ContainerError("bad magic; not an index container")
    body, (stored,) = data[:-8], _U64.unpack(data[-8:])
    if checksum(body) != stored:
        raise ContainerError("checksum mismatch; container is corrupted")

    rd = _Reader(body)
    rd.take(8)
    n = rd.u64()
    flags = rd.u64()
    if n < 1:
        raise ContainerError("text length must be positive")
    raw: Dict[str, bytes] = {}
    while not rd.done():
        tag = rd.take(8).rstrip(b"\0").decode("ascii", errors="replace")
        if tag not in SECTION_FLAGS:
            raise ContainerError(f"unknown section {tag!r}")
        if tag in raw:
            raise ContainerError(f"duplicate section {tag!r}")
        raw[tag] = rd.take(rd.u64())
    if flags != sum(SECTION_FLAGS[k] for k in raw):
        raise ContainerError("section flags do not match section list")

    index = SusIndex(n)
    try:
        if "MUSIX" in raw:
            r = _Reader(raw["MUSIX"])
            index.mus = MusIndex(r.bits(), r.bits())
            _expect_end(r, "MUSIX")
        if "IVSUS" in raw:
            if index.mus is None:
                raise ContainerError("IVSUS section requires MUSIX")
            r = _Reader(raw["IVSUS"])
            m = r.u64()
            rmq = RangeQuery(r.bits(), MIN)
            _expect_end(r, "IVSUS")
            if m != index.mus.m:
                raise ContainerError("IVSUS domain does not match MUS count")
            index.interval = IntervalSusIndex(index.mus, rmq)
        if "PTSUS" in raw:
            r = _Reader(raw["PTSUS"])
            length1, m = r.u64(), r.u64()
            diff = TernarySeq.from_bitvectors(r.bits(), r.bits())
            begin = r.bits()
            _expect_end(r, "PTSUS")
            index.point = PointSusIndex(diff, length1, begin, m)
    except ContainerError:
        raise
    except ValueError as exc:
        raise ContainerError(str(exc)) from exc
    for part in (index.mus, index.point):
        if part is not None and part.n != n:
            raise ContainerError("section length disagrees with header text length")
    return index


def _expect_end(r: _Reader, tag: str) -> None:
    if not r.done():
        raise ContainerError(f"trailing bytes in section {tag}")


def save(index: SusIndex, path: Union[str, Path]) -> int:
    data = to_bytes(index)
    Path(path).write_bytes(data)
    return len(data)


def load(path: Union[str, Path]) -> SusIndex:
    return from_bytes(Path(path).read_bytes())
