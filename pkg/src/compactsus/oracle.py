"""Brute-force reference answers, straight from the definitions.

Every substring of the text is counted in a dictionary; nothing here uses
suffix arrays or the succinct structures, so it can check them.  The one
shortcut taken is that any interval containing a unique interval is
unique, so for a fixed start ``x`` the shortest unique interval reaching
past ``t`` ends at ``max(t, x + su[x] - 1)`` where ``su[x]`` is the length
of the shortest unique substring starting at ``x``.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .mus import Interval, cover
from .suffixarrays import TextLike, as_text

DEFAULT_CAP = 512


def oracle_cap() -> int:
    """Largest text the oracle accepts; ``SUS_ORACLE_CAP`` overrides it."""
    raw = os.environ.get("SUS_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_CAP


def _as_str(text: TextLike) -> str:
    # order-preserving relabel so every symbol is one str character
    sym = as_text(text).symbols.tolist()
    alphabet = {c: chr(k) for k, c in enumerate(sorted(set(sym)))}
    return "".join(alphabet[c] for c in sym)


def oracle_uniqueness(text: TextLike, i: int, j: int) -> bool:
    """Whether ``T[i..j]`` occurs exactly once, by scanning every alignment."""
    s = _as_str(text)
    n = len(s)
    if not 1 <= i <= j <= n:
        raise IndexError(f"invalid interval [{i}, {j}]")
    pat = s[i - 1 : j]
    w = len(pat)
    hits = sum(1 for k in range(n - w + 1) if s[k : k + w] == pat)
    return hits == 1


@dataclass
class OracleReport:
    n: int
    mus_set: List[Interval]
    meaningful_mus_set: List[Interval]
    length_array: List[int]  # length_array[p - 1] = L[p]
    shortest_unique_from: List[Optional[int]] = field(repr=False)
    _point: Dict[int, List[Interval]] = field(default_factory=dict, repr=False)

    def length_at(self, p: int) -> int:
        return self.length_array[p - 1]

    def sus_of_point(self, p: int) -> List[Interval]:
        if p not in self._point:
            self._point[p] = self.sus_of_interval(p, p)
        return self._point[p]

    def sus_of_interval(self, s: int, t: int) -> List[Interval]:
        if not 1 <= s <= t <= self.n:
            raise IndexError(f"invalid query interval [{s}, {t}]")
        best, found = None, []
        for x in range(1, s + 1):
            su = self.shortest_unique_from[x - 1]
            if su is None:
                continue
            length = max(t - x + 1, su)
            if best is None or length < best:
                best, found = length, [x]
            elif length == best:
                found.append(x)
        return [Interval(x, x + best - 1) for x in found]


def oracle_compute(text: TextLike, cap: Optional[int] = None) -> OracleReport:
    s = _as_str(text)
    n = len(s)
    limit = oracle_cap() if cap is None else cap
    if n > limit:
        raise ValueError(f"text length {n} exceeds oracle cap {limit}")

    counts = Counter(s[i:j] for i in range(n) for j in range(i + 1, n + 1))

    def unique(i: int, j: int) -> bool:
        return counts[s[i - 1 : j]] == 1

    mus = [
        Interval(i, j)
        for i in range(1, n + 1)
        for j in range(i, n + 1)
        if unique(i, j) and (i == j or (not unique(i + 1, j) and not unique(i, j - 1)))
    ]

    su: List[Optional[int]] = []
    for x in range(1, n + 1):
        length = next((k for k in range(1, n - x + 2) if unique(x, x + k - 1)), None)
        su.append(length)

    lengths = []
    for p in range(1, n + 1):
        lengths.append(min(max(p - x + 1, su[x - 1]) for x in range(1, p + 1)
                           if su[x - 1] is not None))

    meaningful = [
        iv for iv in mus
        if any(cover(iv, p).length == lengths[p - 1] for p in range(1, n + 1))
    ]
    return OracleReport(n, mus, meaningful, lengths, su)
