"""Command-line front end: ``sus build|query|stats|verify``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import container
from .container import ContainerError, MissingSectionError, SusIndex
from .oracle import oracle_cap
from .pipeline import MUS_METHODS, build_index
from .report import BuildReport
from .verify import shrink, verify_text

EXIT_IO = 1
EXIT_USAGE = 2
EXIT_MISSING = 3
EXIT_CORRUPT = 4
EXIT_MISMATCH = 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> bytes:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from exc
    if not data:
        raise CliError(EXIT_USAGE, "empty text")
    return data


def _load(path: str) -> SusIndex:
    try:
        return container.load(path)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from exc
    except ContainerError as exc:
        raise CliError(EXIT_CORRUPT, f"{path}: {exc}") from exc


def _print_stages(report: BuildReport, out) -> None:
    print(f"{'stage':>5}  {'process':<44} {'bits':>14} {'bits/char':>10}", file=out)
    for row in report.rows():
        print(f"{row['stage']:>5}  {row['process']:<44} {row['bits']:>14} "
              f"{row['bits_per_char']:>10.3f}", file=out)
    print(f"peak working space: {report.peak_bits} bits "
          f"({report.peak_bits / report.n:.3f} bits/char)", file=out)


def cmd_build(args) -> int:
    data = _read_text(args.text)
    report = BuildReport(len(data))
    index = build_index(data, interval=args.sections in ("interval", "both"),
                        point=args.sections in ("point", "both"),
                        mus_method=args.mus_method, report=report)
    try:
        size = container.save(index, args.out)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {args.out}: {exc.strerror or exc}") from exc
    _print_stages(report, sys.stderr)
    print(f"wrote {args.out}: {size} bytes, sections {','.join(index.sections)}, "
          f"n={index.n} m={index.m}", file=sys.stderr)
    return 0


def cmd_query(args) -> int:
    index = _load(args.index)
    try:
        if args.kind == "point":
            qargs = [args.p]
            res = index.require_point().query(args.p)
        else:
            qargs = [args.s, args.t]
            res = index.require_interval().query(args.s, args.t)
    except MissingSectionError as exc:
        raise CliError(EXIT_MISSING, str(exc)) from exc
    except IndexError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from exc
    if args.format == "json":
        doc = {"queries": [{"type": args.kind, "args": qargs,
                            "results": [[iv.start, iv.end] for iv in res]}]}
        print(json.dumps(doc))
    else:
        for iv in res:
            print(f"{iv.start}\t{iv.end}\t{iv.length}")
    return 0


def _stats_rows(index: SusIndex):
    rows = []
    if index.mus is not None:
        rows.append(("MUSIX", index.mus.payload_bits, index.mus.aux_bits))
    if index.interval is not None:
        rows.append(("IVSUS", 64 + index.interval.rmq.payload_bits, index.interval.rmq.aux_bits))
    if index.point is not None:
        rows.append(("PTSUS", 64 + index.point.payload_bits, index.point.aux_bits))
    return rows


def index_stats(index: SusIndex) -> dict:
    """Per-section and per-index sizes in bits.

    The interval index is MUSIX plus IVSUS; the point index is PTSUS alone.
    """
    n = index.n
    sections = {name: {"payload_bits": p, "aux_bits": a, "total_bits": p + a,
                       "bits_per_char": (p + a) / n}
                for name, p, a in _stats_rows(index)}
    totals = {}
    if index.interval is not None:
        bits = sections["MUSIX"]["total_bits"] + sections["IVSUS"]["total_bits"]
        totals["interval"] = {"total_bits": bits, "bits_per_char": bits / n}
    if index.point is not None:
        bits = sections["PTSUS"]["total_bits"]
        totals["point"] = {"total_bits": bits, "bits_per_char": bits / n}
    grand = sum(s["total_bits"] for s in sections.values())
    return {"n": n, "m": index.m, "sections": sections, "indexes": totals,
            "total_bits": grand, "bits_per_char": grand / n}


def cmd_stats(args) -> int:
    if args.build:
        data = _read_text(args.build)
        report = BuildReport(len(data))
        build_index(data, mus_method=args.mus_method, report=report)
        if args.format == "json":
            print(json.dumps({"n": report.n, "peak_bits": report.peak_bits,
                              "stages": report.rows()}))
        else:
            _print_stages(report, sys.stdout)
        return 0
    if not args.index:
        raise CliError(EXIT_USAGE, "stats needs an index path or --build TEXT")
    st = index_stats(_load(args.index))
    if args.format == "json":
        print(json.dumps(st))
        return 0
    print(f"n={st['n']} m={st['m']}")
    print(f"{'section':<8} {'payload':>12} {'aux':>12} {'total':>12} {'bits/char':>10}")
    for name, s in st["sections"].items():
        print(f"{name:<8} {s['payload_bits']:>12} {s['aux_bits']:>12} "
              f"{s['total_bits']:>12} {s['bits_per_char']:>10.3f}")
    for name, s in st["indexes"].items():
        print(f"{name} index: {s['total_bits']} bits, {s['bits_per_char']:.3f} bits/char")
    print(f"total: {st['total_bits']} bits, {st['bits_per_char']:.3f} bits/char")
    return 0


def cmd_verify(args) -> int:
    data = _read_text(args.text)
    cap = args.cap if args.cap is not None else oracle_cap()
    if len(data) > cap:
        raise CliError(EXIT_USAGE, f"text length {len(data)} exceeds oracle cap {cap}")
    rep = verify_text(data, cap=cap)
    for c in rep.checks:
        print(f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f": {c.detail}" if c.detail else ""))
    if rep.ok:
        print(f"all checks passed (n={rep.n})")
        return 0
    small, srep = shrink(data, cap=cap)
    bad = srep.first_failure
    print(f"minimal counterexample: n={small.size} bytes={bytes(small.astype('uint8').tolist())!r}")
    print(f"  {bad.name}: {bad.detail}")
    return EXIT_MISMATCH


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sus", description="Shortest unique substring indexes.")
    p.add_argument("-v", "--verbose", action="store_true", help="log build stages")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build an index container from a text file")
    b.add_argument("text")
    b.add_argument("out")
    g = b.add_mutually_exclusive_group()
    g.add_argument("--point", dest="sections", action="store_const", const="point")
    g.add_argument("--interval", dest="sections", action="store_const", const="interval")
    g.add_argument("--both", dest="sections", action="store_const", const="both")
    b.add_argument("--mus-method", choices=MUS_METHODS, default="isa-lcp")
    b.set_defaults(func=cmd_build, sections="both")

    q = sub.add_parser("query", help="answer a point or interval query")
    q.add_argument("index")
    q.add_argument("--format", choices=("tsv", "json"), default="tsv")
    qk = q.add_subparsers(dest="kind", required=True)
    qp = qk.add_parser("point")
    qp.add_argument("p", type=int)
    qi = qk.add_parser("interval")
    qi.add_argument("s", type=int)
    qi.add_argument("t", type=int)
    for sp in (qp, qi):
        sp.add_argument("--format", choices=("tsv", "json"), default=argparse.SUPPRESS)
    q.set_defaults(func=cmd_query)

    s = sub.add_parser("stats", help="report index sizes, or build-stage working space")
    s.add_argument("index", nargs="?")
    s.add_argument("--build", metavar="TEXT")
    s.add_argument("--mus-method", choices=MUS_METHODS, default="isa-lcp")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_stats)

    v = sub.add_parser("verify", help="check both indexes against the brute-force oracle")
    v.add_argument("text")
    v.add_argument("cap", nargs="?", type=int, help="size cap (default SUS_ORACLE_CAP or 512)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"sus: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
