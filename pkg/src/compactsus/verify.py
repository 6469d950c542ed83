"""Compare built indexes against the brute-force oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

import numpy as np

from . import container
from .interval import IntervalSusIndex
from .mus import mus_from_isa_lcp, mus_from_plcp_rank_next
from .oracle import oracle_cap, oracle_compute
from .point import PointSusIndex
from .suffixarrays import Text, TextLike, as_text, build_succinct_plcp, build_suffix_context

ALL_PAIRS_LIMIT = 64
SAMPLED_PAIRS = 2000


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    n: int
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def first_failure(self) -> Optional[Check]:
        return next((c for c in self.checks if not c.ok), None)

    def add(self, name: str, mismatch: Optional[str]) -> None:
        self.checks.append(Check(name, mismatch is None, mismatch or ""))


def _first_diff(label: str, items, expected, actual) -> Optional[str]:
    for key, want, got in zip(items, expected, actual):
        if want != got:
            return f"{label} {key}: expected {want}, got {got}"
    return None


def verify_text(text: Union[TextLike, Text], cap: Optional[int] = None,
                seed: int = 0) -> VerifyReport:
    """Build both indexes over ``text`` and check every quantity.

    Interval queries cover all ``(s, t)`` pairs up to length
    ``ALL_PAIRS_LIMIT`` and a seeded sample of pairs beyond it.
    """
    t = as_text(text)
    n = t.n
    limit = oracle_cap() if cap is None else cap
    if n > limit:
        raise ValueError(f"text length {n} exceeds oracle cap {limit}")
    rep = VerifyReport(n)
    oracle = oracle_compute(t, cap=limit)

    ctx = build_suffix_context(t)
    splcp = build_succinct_plcp(ctx)
    got_plcp = splcp.to_array()
    rep.add("succinct PLCP equals plain PLCP",
            _first_diff("PLCP at", range(1, n + 1), ctx.plcp[1:].tolist(), got_plcp[1:].tolist()))
    mus = mus_from_isa_lcp(ctx)
    mus2 = mus_from_plcp_rank_next(splcp, ctx.rank_next)
    rep.add("MUS builders agree",
            None if mus == mus2 else f"ISA/LCP gives {mus.intervals()}, PLCP/RankNext gives {mus2.intervals()}")
    rep.add("MUS set", None if mus.intervals() == oracle.mus_set
            else f"expected {oracle.mus_set}, got {mus.intervals()}")

    ivs = IntervalSusIndex(mus)
    pt = PointSusIndex.build(mus, ivs)
    positions = range(1, n + 1)
    rep.add("LENGTH array", _first_diff("LENGTH at", positions, oracle.length_array,
                                        [pt.length_at(p) for p in positions]))
    meaningful = [iv for iv in mus.intervals() if pt.mus_begin[iv.start]]
    rep.add("meaningful MUS set", None if meaningful == oracle.meaningful_mus_set
            else f"expected {oracle.meaningful_mus_set}, got {meaningful}")

    want_pt = [oracle.sus_of_point(p) for p in positions]
    rep.add("point SUS", _first_diff("SUS of point", positions, want_pt,
                                     [pt.query(p).intervals for p in positions]))
    rep.add("leftmost SUS", _first_diff("leftmost SUS of point", positions,
                                        [w[0] for w in want_pt],
                                        [pt.leftmost_sus(p) for p in positions]))
    rep.add("rightmost SUS", _first_diff("rightmost SUS of point", positions,
                                         [w[-1] for w in want_pt],
                                         [pt.rightmost_sus(p) for p in positions]))
    rep.add("point SUS count", _first_diff("SUS count of point", positions,
                                           [len(w) for w in want_pt],
                                           [pt.count(p) for p in positions]))

    if n <= ALL_PAIRS_LIMIT:
        pairs = [(s, e) for s in positions for e in range(s, n + 1)]
    else:
        rng = random.Random(seed)
        pairs = sorted({tuple(sorted((rng.randint(1, n), rng.randint(1, n))))
                        for _ in range(SAMPLED_PAIRS)})
    rep.add("interval SUS", _first_diff("SUS of interval", pairs,
                                        [oracle.sus_of_interval(s, e) for s, e in pairs],
                                        [ivs.query(s, e).intervals for s, e in pairs]))

    loaded = container.from_bytes(container.to_bytes(
        container.SusIndex(n, mus=mus, interval=ivs, point=pt)))
    rt = _first_diff("after reload, SUS of point", positions,
                     [pt.query(p).intervals for p in positions],
                     [loaded.point.query(p).intervals for p in positions])
    rt = rt or _first_diff("after reload, SUS of interval", pairs,
                           [ivs.query(s, e).intervals for s, e in pairs],
                           [loaded.interval.query(s, e).intervals for s, e in pairs])
    rep.add("container round trip", rt)
    return rep


def shrink(text: Union[TextLike, Text], cap: Optional[int] = None,
           budget: int = 500) -> Tuple[np.ndarray, VerifyReport]:
    """Smallest failing text reachable by deleting single symbols.

    ``text`` must already fail verification.  Greedy: drop any symbol whose
    removal keeps the failure, until no single deletion does or ``budget``
    rebuilds have been spent.
    """
    cur = as_text(text).symbols
    rep = verify_text(cur, cap=cap)
    if rep.ok:
        raise ValueError("text passes verification; nothing to shrink")
    changed = True
    while changed and cur.size > 1:
        changed = False
        for k in range(cur.size):
            if budget <= 0:
                return cur, rep
            budget -= 1
            cand = np.delete(cur, k)
            r = verify_text(cand, cap=cap)
            if not r.ok:
                cur, rep, changed = cand, r, True
                break
    return cur, rep


def random_text(rng: np.random.Generator, n: int, sigma: int) -> np.ndarray:
    return rng.integers(0, sigma, n)
