"""Command-line front door.

Subcommands: gen | recognize | contains | classify | sweep | lemma | turan
| sharpness | enumerate.  Graph input/output is line-oriented graph6 so
external generators can be piped in; reports are JSON (default) or plain
text with identical counts.  Exit status: 0 clean, 1 violations (or a
failed certification), 2 usage or hypothesis errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Optional

from . import __version__
from .enumeration import (
    EnumFilter,
    OrderCap,
    enumerate_g6_lines,
    ingest_graph6_stream,
)
from .families import (
    BadParams,
    FamilySpec,
    UnknownFamily,
    family_size_formulas,
    generate_family,
    parse_family_params,
)
from .forests import EmptyForest, OrderTooSmall, parse_forest
from .graph6 import Graph6Error, write_graph6
from .graphs import Graph, degree_profile
from .recognizers import recognize_exception
from .subgraphs import contains_linear_forest, validate_certificate
from .verifier import (
    LEMMAS,
    OutOfTheoremScope,
    SHARPNESS_CASES,
    SourceError,
    THEOREMS,
    classify,
    eg_edge_bound_check,
    sharpness_demo,
    sweep_theorem,
    turan_search,
    verify_lemma,
)

USAGE_EXIT = 2
VIOLATION_EXIT = 1


def _default_jobs() -> int:
    env = os.environ.get("LINFOREST_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _parse_range(text: str) -> tuple[int, int]:
    """Accept "6", "6..9", or "6-9"."""
    for sep in ("..", "-"):
        if sep in text:
            lo, _, hi = text.partition(sep)
            return int(lo), int(hi)
    v = int(text)
    return v, v


def _graph_stream(args) -> Iterable[Graph]:
    errors: list[tuple[int, str]] = []
    if getattr(args, "input", None):
        src = sys.stdin if args.input == "-" else args.input
        yield from ingest_graph6_stream(src, errors=errors)
    else:
        yield from ingest_graph6_stream(sys.stdin, errors=errors)
    for lineno, msg in errors:
        print(f"line {lineno}: {msg}", file=sys.stderr)


def _emit(args, payload: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _report_payload(args, reports: list) -> tuple[str, int]:
    """Render sweep-style reports; exit code 1 iff any violations."""
    bad = sum(r.violations for r in reports)
    if args.format == "json":
        docs = [r.to_json(include_timing=args.timings) for r in reports]
        payload = json.dumps(docs[0] if len(docs) == 1 else docs, sort_keys=True, indent=2)
    else:
        lines = []
        for r in reports:
            exc = ", ".join(f"{k}:{v}" for k, v in sorted(r.exceptions.items())) or "-"
            lines.append(
                f"{r.name} F={','.join(map(str, r.forest)) if r.forest else '-'} n={r.n}: "
                f"checked {r.checked}, contains {r.contains}, exceptions {exc}, "
                f"violations {r.violations}, anomalies {r.below_threshold_anomalies}"
            )
            for c in r.violation_certs:
                lines.append(f"  violation: {c}")
        payload = "\n".join(lines)
    return payload, (VIOLATION_EXIT if bad else 0)


def cmd_gen(args) -> int:
    spec = FamilySpec(args.family.upper(), parse_family_params(args.params or ""))
    g = generate_family(spec)
    if args.format == "json":
        _, delta, edges = degree_profile(g)
        order, eclosed = family_size_formulas(spec)
        _emit(args, json.dumps({
            "graph6": write_graph6(g), "order": g.n, "edges": edges,
            "delta": delta, "closed_form": {"order": order, "edges": eclosed},
        }, sort_keys=True))
    else:
        _emit(args, write_graph6(g))
    return 0


def cmd_recognize(args) -> int:
    out = []
    for g in _graph_stream(args):
        m = recognize_exception(g, args.family.upper(), args.h)
        if args.format == "json":
            out.append(m.to_json() if m else None)
        else:
            out.append(f"{'match ' + m.kind if m else 'no match'}")
    payload = json.dumps(out, sort_keys=True) if args.format == "json" else "\n".join(out)
    _emit(args, payload)
    return 0


def cmd_contains(args) -> int:
    forest = parse_forest(args.forest)
    rows = []
    for g in _graph_stream(args):
        cert = contains_linear_forest(g, forest)
        if cert is not None and not validate_certificate(g, forest, cert):
            raise RuntimeError("certificate failed validation")
        if args.format == "json":
            rows.append({"contains": cert is not None,
                         "certificate": cert.to_json() if cert else None})
        else:
            rows.append("yes" if cert else "no")
    _emit(args, json.dumps(rows, sort_keys=True) if args.format == "json" else "\n".join(rows))
    return 0


def cmd_classify(args) -> int:
    forest = parse_forest(args.forest)
    rows = []
    worst = 0
    for g in _graph_stream(args):
        v = classify(forest, g)
        if v.kind == "violation":
            worst = max(worst, VIOLATION_EXIT)
        elif v.kind == "hypothesis_not_met":
            worst = max(worst, USAGE_EXIT)
        rows.append(v.to_json() if args.format == "json" else v.kind)
    _emit(args, json.dumps(rows, sort_keys=True) if args.format == "json" else "\n".join(rows))
    return worst


def cmd_sweep(args) -> int:
    forest = parse_forest(args.forest)
    lo, hi = _parse_range(args.range if args.range else str(args.n))
    reports = [
        sweep_theorem(args.theorem, forest, n, source=args.input, jobs=args.jobs)
        for n in range(lo, hi + 1)
    ]
    payload, code = _report_payload(args, reports)
    _emit(args, payload)
    return code


def cmd_lemma(args) -> int:
    name = args.lemma.upper()
    if name == "EG_BOUND":
        lo, hi = _parse_range(args.range if args.range else str(args.n))
        reports = [eg_edge_bound_check(n, source=args.input, jobs=args.jobs)
                   for n in range(lo, hi + 1)]
    elif name == "BIPARTITE_GLUE":
        reports = [verify_lemma(name, 0, h=args.h)]
    else:
        lo, hi = _parse_range(args.range if args.range else str(args.n))
        reports = [verify_lemma(name, n, h=args.h, source=args.input, jobs=args.jobs)
                   for n in range(lo, hi + 1)]
    payload, code = _report_payload(args, reports)
    _emit(args, payload)
    return code


def cmd_turan(args) -> int:
    forest = parse_forest(args.forest)
    rep = turan_search(forest, args.n, connected_only=args.connected,
                       jobs=args.jobs, source=args.input)
    if args.format == "json":
        _emit(args, json.dumps(rep.to_json(include_timing=args.timings),
                               sort_keys=True, indent=2))
    else:
        _emit(args, f"ex({args.n}, {args.forest}) = {rep.max_edges} "
                    f"({len(rep.maximizers)} maximizer(s); S-family edges {rep.s_edges}, "
                    f"S+-family edges {rep.splus_edges})")
    return 0


def cmd_sharpness(args) -> int:
    params = parse_family_params(args.params or "")
    rep = sharpness_demo(args.case, **params)
    if args.format == "json":
        _emit(args, json.dumps(rep, sort_keys=True, indent=2))
    else:
        _emit(args, f"{rep['case']}: G = {rep['construction']} (n={rep['n']}), "
                    f"delta={rep['delta']} (= h-1: {rep['delta'] == rep['delta_expected']}), "
                    f"forest embeds: {rep['forest_embeds']}, passed: {rep['passed']}")
    return 0 if rep["passed"] else VIOLATION_EXIT


def cmd_enumerate(args) -> int:
    filt = EnumFilter(n=args.n, min_degree=args.min_degree, connectivity=args.connectivity)
    count = 0
    if args.input:
        errors: list[tuple[int, str]] = []
        src = sys.stdin if args.input == "-" else args.input
        for g in ingest_graph6_stream(src, dedup=args.dedup, enum_filter=filt, errors=errors):
            print(write_graph6(g))
            count += 1
        for lineno, msg in errors:
            print(f"line {lineno}: {msg}", file=sys.stderr)
    else:
        for line in enumerate_g6_lines(filt, jobs=args.jobs):
            print(line)
            count += 1
            if args.progress and count % 100000 == 0:
                print(f"enumerated {count} graphs", file=sys.stderr)
    if args.progress:
        print(f"total {count} graphs", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="linforest",
        description="exact verification toolkit for minimum-degree linear-forest theorems",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, jobs=True):
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--out", help="write the report/output to this file")
        sp.add_argument("--timings", action="store_true", help="include wall time in JSON")
        if jobs:
            sp.add_argument("--jobs", type=int, default=_default_jobs(),
                            help="worker processes (default: cores or $LINFOREST_JOBS)")

    sp = sub.add_parser("gen", help="generate a named family member as graph6")
    sp.add_argument("--family", required=True)
    sp.add_argument("--params", help="comma list such as n=7,h=2")
    common(sp, jobs=False)
    sp.set_defaults(fn=cmd_gen, format="text")

    sp = sub.add_parser("recognize", help="family membership for graph6 input")
    sp.add_argument("--family", required=True)
    sp.add_argument("--h", type=int)
    sp.add_argument("--input", help="graph6 file (default: stdin)")
    common(sp, jobs=False)
    sp.set_defaults(fn=cmd_recognize)

    sp = sub.add_parser("contains", help="linear-forest containment for graph6 input")
    sp.add_argument("--forest", required=True)
    sp.add_argument("--input", help="graph6 file (default: stdin)")
    common(sp, jobs=False)
    sp.set_defaults(fn=cmd_contains)

    sp = sub.add_parser("classify", help="per-graph theorem verdicts")
    sp.add_argument("--forest", required=True)
    sp.add_argument("--input", help="graph6 file (default: stdin)")
    common(sp, jobs=False)
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("sweep", help="exhaustive theorem sweep at one or more orders")
    sp.add_argument("--theorem", required=True, help="|".join(t.lower() for t in THEOREMS))
    sp.add_argument("--forest", required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--range", help="order range lo..hi (overrides --n)")
    sp.add_argument("--input", help="graph6 file instead of built-in enumeration")
    common(sp)
    sp.set_defaults(fn=cmd_sweep)

    sp = sub.add_parser("lemma", help="lemma-level sweep")
    sp.add_argument("--lemma", required=True,
                    help="|".join(l.lower() for l in LEMMAS) + "|eg_bound")
    sp.add_argument("--n", type=int)
    sp.add_argument("--range", help="order range lo..hi")
    sp.add_argument("--h", type=int, help="threshold parameter where the lemma needs one")
    sp.add_argument("--input", help="graph6 file instead of built-in enumeration")
    common(sp)
    sp.set_defaults(fn=cmd_lemma)

    sp = sub.add_parser("turan", help="exact forest-free edge maximum")
    sp.add_argument("--forest", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--input", help="graph6 file instead of built-in enumeration")
    common(sp)
    sp.set_defaults(fn=cmd_turan)

    sp = sub.add_parser("sharpness", help="minimum-degree sharpness demonstrations")
    sp.add_argument("--case", required=True, help="|".join(SHARPNESS_CASES))
    sp.add_argument("--params", help="overrides such as a1=3,q=2")
    common(sp, jobs=False)
    sp.set_defaults(fn=cmd_sharpness)

    sp = sub.add_parser("enumerate", help="stream non-isomorphic graphs as graph6")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--min-degree", type=int, default=0)
    sp.add_argument("--connectivity", default="any",
                    choices=("any", "connected", "two_connected", "has_cut_vertex"))
    sp.add_argument("--input", help="dedup/filter an existing graph6 stream instead")
    sp.add_argument("--dedup", action="store_true", help="canonical dedup for --input")
    sp.add_argument("--progress", action="store_true")
    common(sp)
    sp.set_defaults(fn=cmd_enumerate)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (Graph6Error, BadParams, UnknownFamily, OrderTooSmall, EmptyForest,
            OutOfTheoremScope, SourceError, OrderCap, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
