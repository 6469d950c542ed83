"""Working-space bookkeeping for index construction."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List

log = logging.getLogger("compactsus.build")


@dataclass
class Stage:
    number: int
    process: str
    live_bits: int
    live: Dict[str, int]


@dataclass
class BuildReport:
    """Live structures after each construction step.

    ``live_bits`` excludes the structures named in ``excluded`` (the MUS
    markers, to match how the point-index construction is usually costed).
    """

    n: int = 0
    excluded: tuple = ("MB", "ME")
    stages: List[Stage] = field(default_factory=list)
    _live: Dict[str, int] = field(default_factory=dict, repr=False)

    def hold(self, name: str, bits: int) -> None:
        self._live[name] = int(bits)

    def release(self, name: str) -> None:
        self._live.pop(name, None)

    def stage(self, process: str) -> Stage:
        live = dict(self._live)
        total = sum(v for k, v in live.items() if k not in self.excluded)
        st = Stage(len(self.stages) + 1, process, total, live)
        self.stages.append(st)
        log.info("stage %d: %-44s %12d bits%s", st.number, process, total,
                 f"  ({total / self.n:.3f} bits/char)" if self.n else "")
        return st

    @property
    def peak_bits(self) -> int:
        return max((s.live_bits for s in self.stages), default=0)

    def rows(self) -> List[dict]:
        return [
            {"stage": s.number, "process": s.process, "bits": s.live_bits,
             "bits_per_char": s.live_bits / self.n if self.n else None,
             "live": sorted(s.live)}
            for s in self.stages
        ]
