"""Compact indexes for minimal unique substrings and shortest unique substring queries."""

from .bitseq import BitVector, TernarySeq
from .container import ContainerError, MissingSectionError, SusIndex, load, save
from .interval import IntervalSusIndex, QueryResult
from .mus import Interval, MusIndex, cover, mus_from_isa_lcp, mus_from_plcp_rank_next
from .oracle import OracleReport, oracle_compute, oracle_uniqueness
from .pipeline import build_index
from .point import PointSusIndex
from .rangequery import MAX, MIN, RangeQuery
from .suffixarrays import SuccinctPlcp, SuffixContext, build_succinct_plcp, build_suffix_context

__all__ = [
    "BitVector", "TernarySeq", "RangeQuery", "MIN", "MAX",
    "SuffixContext", "SuccinctPlcp", "build_suffix_context", "build_succinct_plcp",
    "Interval", "MusIndex", "cover", "mus_from_isa_lcp", "mus_from_plcp_rank_next",
    "IntervalSusIndex", "PointSusIndex", "QueryResult",
    "OracleReport", "oracle_compute", "oracle_uniqueness",
    "SusIndex", "ContainerError", "MissingSectionError", "load", "save", "build_index",
]
