"""Command line front end.

Exit codes follow one convention everywhere: 0 when the queried property
holds or a coloring was found, 1 when it fails or no coloring exists, and
2 for unusable input (bad flags, bad pattern names, malformed files).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .coloring import ListSystem, l_colorable, lists_from_json, lists_to_json
from .dichotomy import classify, describe
from .families import gen_Gr, gen_Hr, verify_Gr, verify_Hr
from .graphs import Graph, Graph6Error, Pattern, parse_graph6, write_graph6
from .obstructions import is_4_vertex_critical, obstruction_report
from .propagation import (
    MAX_ENUM_LENGTH,
    P6_REFERENCE_COUNTS,
    enumerate_propagation_paths,
)


@dataclass(frozen=True)
class RunConfig:
    """Validated options for one invocation."""

    command: str
    forbidden: tuple[str, ...] = ()
    max_n: int = 25
    jobs: int = 1
    emit: str | None = None
    graph: str | None = None
    lists: str | None = None
    name: str | None = None
    r: int = 1
    pattern: str | None = None
    fmt: str = "table"
    verify: bool = False

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError(f"--jobs must be at least 1, got {self.jobs}")
        if not 0 <= self.max_n <= MAX_ENUM_LENGTH:
            raise ValueError(f"--max-n must be between 0 and {MAX_ENUM_LENGTH}, got {self.max_n}")


class _UsageError(Exception):
    pass


def _load_graph(path: str) -> Graph:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read graph file {path}: {exc}")
    try:
        return parse_graph6(text.strip())
    except Graph6Error as exc:
        raise _UsageError(f"bad graph6 in {path}: {exc}")


def _load_lists(path: str, n: int) -> ListSystem:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read list file {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise _UsageError(f"bad JSON in {path}: {exc}")
    try:
        lists = lists_from_json(obj)
    except ValueError as exc:
        raise _UsageError(f"bad list system in {path}: {exc}")
    if lists.n != n:
        raise _UsageError(f"list system in {path} has {lists.n} entries, graph has {n}")
    return lists


def cmd_enumerate(cfg: RunConfig) -> int:
    try:
        patterns = [Pattern.parse(name) for name in cfg.forbidden]
    except ValueError as exc:
        raise _UsageError(str(exc))
    result = enumerate_propagation_paths(
        patterns, cfg.max_n, emit=cfg.emit, jobs=cfg.jobs
    )
    if cfg.fmt == "json":
        print(json.dumps({"counts": list(result.counts), "max_length": result.max_length}))
    else:
        for k in range(1, cfg.max_n + 1):
            print(f"{k}\t{result.count_at(k)}")
        print(f"max_length\t{result.max_length}")
    if [p.name for p in patterns] == ["P6"]:
        upto = min(cfg.max_n, len(P6_REFERENCE_COUNTS))
        bad = [
            (k, result.count_at(k), P6_REFERENCE_COUNTS[k - 1])
            for k in range(1, upto + 1)
            if result.count_at(k) != P6_REFERENCE_COUNTS[k - 1]
        ]
        if bad:
            for k, got, want in bad:
                print(f"length {k}: got {got}, reference says {want}", file=sys.stderr)
            return 1
    return 0


def cmd_solve(cfg: RunConfig) -> int:
    g = _load_graph(cfg.graph)
    lists = (
        _load_lists(cfg.lists, g.n) if cfg.lists else ListSystem.full(g.n)
    )
    coloring = l_colorable(g, lists)
    if coloring is None:
        print("UNSAT")
        return 1
    if cfg.fmt == "json":
        print(json.dumps({"coloring": list(coloring)}))
    else:
        for v, c in enumerate(coloring):
            print(f"{v}\t{c}")
    return 0


def cmd_check(cfg: RunConfig) -> int:
    g = _load_graph(cfg.graph)
    lists = (
        _load_lists(cfg.lists, g.n) if cfg.lists else ListSystem.full(g.n)
    )
    report = obstruction_report(g, lists)
    if cfg.fmt == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"colorable\t{report.colorable}")
        print(f"minimal\t{report.minimal}")
        print(f"non_critical\t{','.join(map(str, report.non_critical)) or '-'}")
        if report.extracted is not None:
            print(f"extracted\t{','.join(map(str, report.extracted[0]))}")
    return 0 if not report.colorable and report.minimal else 1


def cmd_critical(cfg: RunConfig) -> int:
    g = _load_graph(cfg.graph)
    verdict = is_4_vertex_critical(g)
    if cfg.fmt == "json":
        print(json.dumps({"four_vertex_critical": verdict}))
    else:
        print(f"four_vertex_critical\t{verdict}")
    return 0 if verdict else 1


def cmd_family(cfg: RunConfig) -> int:
    if cfg.name == "Gr":
        if cfg.verify:
            report = verify_Gr(cfg.r)
        else:
            print(write_graph6(gen_Gr(cfg.r)))
            return 0
    elif cfg.name == "Hr":
        if cfg.verify:
            report = verify_Hr(cfg.r)
        else:
            g, lists = gen_Hr(cfg.r)
            if cfg.fmt == "json":
                print(json.dumps({"graph6": write_graph6(g), "lists": lists_to_json(lists)}))
            else:
                print(write_graph6(g))
                print(json.dumps(lists_to_json(lists)))
            return 0
    else:
        raise _UsageError(f"--name must be Gr or Hr, got {cfg.name!r}")
    if cfg.fmt == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        for check in report.checks:
            state = "PASS" if check.passed else "FAIL"
            tail = f"\t{check.details}" if check.details else ""
            print(f"{check.name}\t{state}{tail}")
    return 0 if report.passed else 1


def cmd_classify(cfg: RunConfig) -> int:
    text = cfg.pattern
    try:
        target = Pattern.parse(text)
    except ValueError:
        try:
            target = parse_graph6(text)
        except Graph6Error:
            raise _UsageError(
                f"{text!r} is neither a recognized pattern name nor valid graph6"
            )
    verdict = classify(target)
    if cfg.fmt == "json":
        out = verdict.to_json_dict()
        out["summary"] = describe(verdict)
        print(json.dumps(out))
    else:
        print(f"case\t{verdict.case}")
        print(f"finite_vertex_critical\t{verdict.finite_vertex_critical}")
        print(f"finite_list_obstructions\t{verdict.finite_list_obstructions}")
        print(describe(verdict))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricrit",
        description="Obstructions to list 3-coloring: enumeration, families, classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="count pattern-free propagation paths by length")
    p.add_argument("--forbidden", action="append", default=[], metavar="PATTERN",
                   help="forbidden pattern name, repeatable")
    p.add_argument("--max-n", type=int, default=25)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--emit", metavar="FILE", help="write accepted configurations here")
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("solve", help="find a list coloring or report UNSAT")
    p.add_argument("--graph", required=True, metavar="G6FILE")
    p.add_argument("--lists", metavar="JSONFILE")
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("check", help="full obstruction report for a graph with lists")
    p.add_argument("--graph", required=True, metavar="G6FILE")
    p.add_argument("--lists", metavar="JSONFILE")
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("critical", help="is the graph 4-vertex-critical?")
    p.add_argument("--graph", required=True, metavar="G6FILE")
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("family", help="emit or verify a certificate family member")
    p.add_argument("--name", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("classify", help="finite/infinite verdict for a pattern")
    p.add_argument("--pattern", required=True, metavar="NAME_OR_G6")
    p.add_argument("--format", choices=["table", "json"], default="table")

    return parser


_COMMANDS = {
    "enumerate": cmd_enumerate,
    "solve": cmd_solve,
    "check": cmd_check,
    "critical": cmd_critical,
    "family": cmd_family,
    "classify": cmd_classify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        cfg = RunConfig(
            command=args.command,
            forbidden=tuple(getattr(args, "forbidden", ()) or ()),
            max_n=getattr(args, "max_n", 25),
            jobs=getattr(args, "jobs", 1),
            emit=getattr(args, "emit", None),
            graph=getattr(args, "graph", None),
            lists=getattr(args, "lists", None),
            name=getattr(args, "name", None),
            r=getattr(args, "r", 1),
            pattern=getattr(args, "pattern", None),
            fmt=getattr(args, "format", "table"),
            verify=getattr(args, "verify", False),
        )
        return _COMMANDS[args.command](cfg)
    except (_UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())
