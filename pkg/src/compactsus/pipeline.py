"""Text in, indexes out, with working space logged stage by stage."""

from __future__ import annotations

from typing import Optional, Union

from .container import SusIndex
from .interval import IntervalSusIndex
from .mus import mus_from_isa_lcp, mus_from_plcp_rank_next
from .point import PointSusIndex
from .report import BuildReport
from .suffixarrays import Text, TextLike, as_text, build_succinct_plcp, build_suffix_context

MUS_METHODS = ("isa-lcp", "plcp")


def build_index(text: Union[TextLike, Text], interval: bool = True, point: bool = True,
                mus_method: str = "isa-lcp",
                report: Optional[BuildReport] = None) -> SusIndex:
    """Build the requested SUS indexes over ``text``.

    ``mus_method`` picks the MUS builder: ``"isa-lcp"`` reads ISA and LCP,
    ``"plcp"`` reads the 2n-bit PLCP and RankNext.
    """
    if not (interval or point):
        raise ValueError("nothing to build")
    if mus_method not in MUS_METHODS:
        raise ValueError(f"mus_method must be one of {MUS_METHODS}")
    t = as_text(text)
    n = t.n
    rep = report if report is not None else BuildReport(n)
    rep.n = n

    ctx = build_suffix_context(t)
    rep.hold("SA/ISA/LCP/PLCP/Phi/RankNext (plain)", 8 * ctx.nbytes)
    rep.stage("construct plain suffix arrays")
    if mus_method == "plcp":
        splcp = build_succinct_plcp(ctx)
        rep.release("SA/ISA/LCP/PLCP/Phi/RankNext (plain)")
        rep.hold("succinct PLCP", splcp.total_bits)
        rep.hold("RankNext (plain)", 8 * ctx.rank_next.nbytes)
        rep.stage("keep succinct PLCP and RankNext")
        mus = mus_from_plcp_rank_next(splcp, ctx.rank_next)
        del splcp
    else:
        mus = mus_from_isa_lcp(ctx)
    rep.hold("MB", mus.mb.payload_bits + mus.mb.aux_bits)
    rep.hold("ME", mus.me.payload_bits + mus.me.aux_bits)
    rep.stage("compute MB and ME")
    del ctx
    for name in ("SA/ISA/LCP/PLCP/Phi/RankNext (plain)", "succinct PLCP", "RankNext (plain)"):
        rep.release(name)
    rep.stage("input MB, ME (suffix arrays released)")

    ivs = IntervalSusIndex(mus)
    rep.hold("RmQ on MUSlen", ivs.rmq.total_bits)
    rep.stage("construct RmQ on MUSlen")

    pt = None
    if point:
        pt = PointSusIndex.build(mus, ivs, report=rep, release_interval=not interval)
    return SusIndex(n, mus=mus if interval else None,
                    interval=ivs if interval else None, point=pt)
