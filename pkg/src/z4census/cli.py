"""Command-line front end.

Subcommands: ``enumerate`` (run the census and write graph6 + JSON report),
``invariants`` (profile graph6 records), ``canon`` (canonical forms),
``iso`` (isomorphism verdict), ``convert`` (graph6 <-> edge-list text).

Exit codes: 0 all checks pass, 2 a proposition check is refuted,
1 operational error (bad input, I/O failure, unsupported configuration).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .aut import are_isomorphic, canonical_form
from .census import ScanConfig, enumerate_family, verify_structure_claim
from .graphs import (
    Graph,
    Graph6Error,
    graph6_decode,
    graph6_encode,
    make_graph,
)
from .invariants import profile
from .report import (
    PASS,
    REFUTED,
    build_report,
    profile_to_dict,
    render_table,
    report_verdict,
)

_THREADS_ENV = "Z4CENSUS_THREADS"


def _default_threads() -> int:
    env = os.environ.get(_THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _parse_cycle_types(text: str):
    if text == "all":
        return "all"
    parts = tuple(int(t) for t in text.split(",") if t)
    if not parts:
        raise argparse.ArgumentTypeError(f"bad cycle type {text!r}")
    return [parts]


def _load_graphs(path: str, strict: bool = True) -> list[Graph]:
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                graphs.append(graph6_decode(line, strict=strict))
            except ValueError as exc:
                raise Graph6Error(f"{path}: line {lineno}: malformed graph6 ({exc})")
    return graphs


def cmd_enumerate(args) -> int:
    if args.n != 10 or args.aut_order != 4:
        print(
            "error: this census is defined for 10 vertices and automorphism "
            "order 4; adapted modes (--n/--aut-order) are out of scope",
            file=sys.stderr,
        )
        return 1
    cfg = ScanConfig(
        n=args.n,
        target_order=args.aut_order,
        cycle_types=args.cycle_types,
        parallel_chunks=args.threads,
    )
    timings = {}
    t0 = time.perf_counter()
    family = enumerate_family(cfg)
    timings["enumeration"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    structure = verify_structure_claim(family)
    timings["structure_check"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    report = build_report(family, cfg, structure=structure, timings=timings)
    timings["profiles_and_checks"] = time.perf_counter() - t0
    report["timings_seconds"] = {k: round(v, 3) for k, v in timings.items()}

    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            for canon in family.canonical_strings():
                fh.write(canon + "\n")
    if args.report:
        with open(args.report, "w", encoding="ascii") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")

    verdict = report_verdict(report)
    print(f"census_id: {report['census_id']}")
    print(f"classes: {len(family.classes)}")
    for check in report["proposition_checks"]:
        print(f"  item {check['item']:>2}: {check['verdict']}  {check['claim']}")
    print(
        f"  structure : {'PASS' if report['structure_check']['verified'] else REFUTED}"
        f"  {report['structure_check']['detail']}"
    )
    print(f"verdict: {verdict}")
    if verdict == PASS:
        return 0
    if verdict == REFUTED:
        return 2
    return 1


def cmd_invariants(args) -> int:
    graphs = _load_graphs(args.input, strict=not args.lenient)
    rows = []
    for g in graphs:
        d = profile_to_dict(profile(g))
        d["graph"] = graph6_encode(g)
        rows.append(d)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        print(render_table(rows))
    return 0


def cmd_canon(args) -> int:
    graphs = _load_graphs(args.input, strict=not args.lenient)
    for g in graphs:
        print(canonical_form(g).canonical_bytes)
    return 0


def cmd_iso(args) -> int:
    ga = _load_graphs(args.a)
    gb = _load_graphs(args.b)
    if len(ga) != 1 or len(gb) != 1:
        print("error: iso expects exactly one graph per file", file=sys.stderr)
        return 1
    verdict = are_isomorphic(ga[0], gb[0])
    print("isomorphic" if verdict else "non-isomorphic")
    return 0


def _read_edge_list(path: str) -> Graph:
    n = None
    edges = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if n is None:
                if len(parts) != 1:
                    raise ValueError(f"{path}: line {lineno}: expected the vertex count")
                n = int(parts[0])
                continue
            if len(parts) != 2:
                raise ValueError(f"{path}: line {lineno}: expected 'u v'")
            u, v = int(parts[0]), int(parts[1])
            edges.append((u - 1, v - 1))
    if n is None:
        raise ValueError(f"{path}: empty edge-list file")
    return make_graph(n, edges)


def cmd_convert(args) -> int:
    out = open(args.out, "w", encoding="ascii") if args.out else sys.stdout
    try:
        if args.to == "edges":
            for g in _load_graphs(args.input):
                out.write(f"{g.n}\n")
                for u, v in g.edges():
                    out.write(f"{u + 1} {v + 1}\n")
        else:
            g = _read_edge_list(args.input)
            out.write(graph6_encode(g) + "\n")
    finally:
        if args.out:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z4census",
        description=(
            "Enumerate and verify the census of 10-vertex graphs whose "
            "automorphism group is cyclic of order 4."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="run the census and the verification battery")
    p.add_argument(
        "--cycle-types",
        type=_parse_cycle_types,
        default="all",
        metavar="all|4,4,2",
        help="scan all order-4 cycle types or a single one (default: all)",
    )
    p.add_argument("--threads", type=int, default=_default_threads(), metavar="T")
    p.add_argument("--out", metavar="FILE", help="write canonical graph6 records")
    p.add_argument("--report", metavar="FILE", help="write the JSON report")
    p.add_argument("--n", type=int, default=10, help=argparse.SUPPRESS)
    p.add_argument("--aut-order", type=int, default=4, help=argparse.SUPPRESS)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("invariants", help="profile graph6 records")
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--lenient", action="store_true", help="tolerate nonzero padding")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("canon", help="canonical graph6 per input record")
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--lenient", action="store_true")
    p.set_defaults(fn=cmd_canon)

    p = sub.add_parser("iso", help="isomorphism verdict for two graphs")
    p.add_argument("a", metavar="A.g6")
    p.add_argument("b", metavar="B.g6")
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("convert", help="graph6 <-> edge-list text")
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--to", choices=("edges", "graph6"), required=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=cmd_convert)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
