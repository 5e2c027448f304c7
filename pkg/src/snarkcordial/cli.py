"""Command-line front end.

Subcommands: construct, label, verify, check-snark, search, export.
Exit codes: 0 success / property holds, 1 property fails, 2 invalid input,
3 search budget exhausted (or a certificate field left unchecked).

Results go only to the output files (or stdout); progress and diagnostics
go to stderr.  Identical inputs and seeds produce byte-identical artifacts.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Any

from .certificate import SnarkCertificate, snark_certificate
from .compositions import (
    AttachmentPolicy,
    CompositeGraph,
    one_point_union_paths,
    open_star,
    path_union,
)
from .goldberg import GoldbergGraph, goldberg
from .graph import Graph, GraphError, ParameterError
from .labeling import (
    PATTERN_1,
    PATTERN_2,
    Labeling,
    PatternSchedule,
    apply_schedule,
    cordiality_report,
    induce_edge_labels,
    pattern1,
    pattern2,
    schedule_for,
)
from .search import ABSENT, FOUND, SearchBudget, search_cordial
from .serialize import (
    canonical_dumps,
    certificate_to_json,
    graph_from_json,
    graph_to_dot,
    graph_to_graphml,
    graph_to_json,
    labeling_from_json,
    labeling_to_dict,
    labeling_to_json,
    report_to_dict,
    report_to_json,
)

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

FAMILIES = ("goldberg", "path-union", "open-star", "one-point-union", "petersen")
PATTERNS = ("p1", "p2", "theorem", "constant0", "constant1")
FORMATS = ("json", "dot", "graphml")


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _progress_printer(what: str):
    def emit(nodes: int) -> None:
        print(f"{what}: still searching, {nodes} nodes", file=sys.stderr)

    return emit


def _policy(args: argparse.Namespace) -> AttachmentPolicy:
    return AttachmentPolicy(block=args.attach_block, slot=args.attach_slot)


def _require(args: argparse.Namespace, names: list[str]) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise ParameterError(
                f"family {args.family!r} requires -{name} to be set"
            )


def _build_family(args: argparse.Namespace) -> Graph | GoldbergGraph | CompositeGraph:
    family = args.family
    if family == "petersen":
        from .graph import petersen

        return petersen()
    _require(args, ["n"])
    if family == "goldberg":
        return goldberg(args.n)
    policy = _policy(args)
    if family == "path-union":
        _require(args, ["m"])
        return path_union(args.n, args.m, policy)
    if family == "open-star":
        _require(args, ["t"])
        return open_star(args.n, args.t, policy)
    _require(args, ["t", "p"])
    return one_point_union_paths(args.n, args.t, args.p, policy)


def _plain_graph(built: Graph | GoldbergGraph | CompositeGraph) -> Graph:
    return built.graph if isinstance(built, (GoldbergGraph, CompositeGraph)) else built


def _format_graph(g: Graph, fmt: str, labeling: Labeling | None = None) -> str:
    if fmt == "json":
        return graph_to_json(g, include_coords=True)
    if fmt == "dot":
        return graph_to_dot(g, labeling)
    return graph_to_graphml(g, labeling)


def _uniform_schedule(composite: CompositeGraph, pattern: str) -> PatternSchedule:
    return PatternSchedule(
        {key: pattern for key in composite.copy_keys()}, apex_label=0
    )


def _labeling_for(
    built: Graph | GoldbergGraph | CompositeGraph, pattern: str
) -> Labeling:
    g = _plain_graph(built)
    if pattern in ("constant0", "constant1"):
        value = 0 if pattern == "constant0" else 1
        return induce_edge_labels(g, [value] * g.vertex_count)
    if isinstance(built, GoldbergGraph):
        if pattern in ("p1", "theorem"):
            return induce_edge_labels(g, pattern1(built.n))
        return induce_edge_labels(g, pattern2(built.n))
    if isinstance(built, CompositeGraph):
        if pattern == "theorem":
            return apply_schedule(built, schedule_for(built))
        mapped = PATTERN_1 if pattern == "p1" else PATTERN_2
        return apply_schedule(built, _uniform_schedule(built, mapped))
    raise ParameterError(
        f"pattern {pattern!r} needs block coordinates; this family has none"
    )


def cmd_construct(args: argparse.Namespace) -> int:
    built = _build_family(args)
    _write(args.out, _format_graph(_plain_graph(built), args.format))
    return EXIT_OK


def cmd_label(args: argparse.Namespace) -> int:
    built = _build_family(args)
    g = _plain_graph(built)
    labeling = _labeling_for(built, args.pattern)
    report = cordiality_report(g, labeling)
    payload: dict[str, Any] = report_to_dict(report)

    final = labeling
    if args.repair:
        if report.is_cordial:
            payload["repair"] = {"schedule_was_cordial": True, "status": "not_needed"}
        else:
            budget = SearchBudget(max_nodes=args.max_nodes, seed=_seed(args))
            result = search_cordial(g, budget, _progress_printer("repair search"))
            payload["repair"] = {
                "schedule_was_cordial": False,
                "status": result.status,
                "nodes": result.nodes,
            }
            if result.found:
                assert result.labeling is not None
                final = result.labeling
                report = cordiality_report(g, final)
                print(
                    "scheduled labeling was not cordial; wrote repaired labeling",
                    file=sys.stderr,
                )

    if args.format == "dot":
        _write(args.out, graph_to_dot(g, final))
    else:
        _write(args.out, labeling_to_json(final))
    _write(args.report_out, canonical_dumps(payload))
    return EXIT_OK if report.is_cordial else EXIT_PROPERTY_FAILS


def cmd_verify(args: argparse.Namespace) -> int:
    with open(args.graph, encoding="utf-8") as fh:
        g = graph_from_json(fh.read())
    with open(args.labeling, encoding="utf-8") as fh:
        labeling = labeling_from_json(fh.read())
    report = cordiality_report(g, labeling)
    _write(args.out, report_to_json(report))
    return EXIT_OK if report.is_cordial else EXIT_PROPERTY_FAILS


def _checked_portion_passes(cert: SnarkCertificate) -> bool:
    return (
        cert.is_cubic
        and cert.is_connected
        and not cert.bridge_edges
        and cert.girth >= 5
        and cert.cyclic_edge_connectivity_ge_4 is not False
        and cert.three_edge_colorable is not True
    )


def cmd_check_snark(args: argparse.Namespace) -> int:
    if args.graph is not None:
        with open(args.graph, encoding="utf-8") as fh:
            g: Graph | GoldbergGraph | CompositeGraph = graph_from_json(fh.read())
    else:
        if args.family is None:
            raise ParameterError("need either --graph or --family")
        g = _build_family(args)
    cert = snark_certificate(
        _plain_graph(g), progress=_progress_printer("coloring search")
    )
    _write(args.out, certificate_to_json(cert))
    if cert.is_snark:
        return EXIT_OK
    if cert.unchecked and _checked_portion_passes(cert):
        print(
            "verdict undecided: unchecked fields " + ", ".join(cert.unchecked),
            file=sys.stderr,
        )
        return EXIT_BUDGET
    return EXIT_PROPERTY_FAILS


def _seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("SNARK_CORDIAL_SEED", "0"))


def cmd_search(args: argparse.Namespace) -> int:
    if args.graph is not None:
        with open(args.graph, encoding="utf-8") as fh:
            g = graph_from_json(fh.read())
    else:
        if args.family is None:
            raise ParameterError("need either --graph or --family")
        g = _plain_graph(_build_family(args))
    budget = SearchBudget(max_nodes=args.max_nodes, seed=_seed(args))
    result = search_cordial(g, budget, _progress_printer("labeling search"))
    payload: dict[str, Any] = {"status": result.status, "nodes": result.nodes}
    if result.labeling is not None:
        payload["labeling"] = labeling_to_dict(result.labeling)
        payload["report"] = report_to_dict(cordiality_report(g, result.labeling))
    else:
        payload["labeling"] = None
        payload["report"] = None
    _write(args.out, canonical_dumps(payload))
    if result.status == FOUND:
        return EXIT_OK
    if result.status == ABSENT:
        return EXIT_PROPERTY_FAILS
    return EXIT_BUDGET


def cmd_export(args: argparse.Namespace) -> int:
    with open(args.infile, encoding="utf-8") as fh:
        g = graph_from_json(fh.read())
    labeling = None
    if args.labeling is not None:
        with open(args.labeling, encoding="utf-8") as fh:
            labeling = labeling_from_json(fh.read())
        cordiality_report(g, labeling)  # validates the pairing
    _write(args.out, _format_graph(g, args.format, labeling))
    return EXIT_OK


def _add_family_options(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", choices=FAMILIES, required=required)
    p.add_argument("-n", type=int, default=None, help="blocks per copy (odd)")
    p.add_argument("-m", type=int, default=None, help="copies in a path union")
    p.add_argument("-t", type=int, default=None, help="branches or arms")
    p.add_argument("-p", type=int, default=None, help="copies per arm")
    p.add_argument("--attach-block", type=int, default=1)
    p.add_argument("--attach-slot", type=int, default=7)


def _add_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default="-", help="output path, - for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snarkcordial",
        description="Construct snark families, label them, verify cordiality.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family member and write it")
    _add_family_options(p)
    p.add_argument("--format", choices=FORMATS, default="json")
    _add_out(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("label", help="label a family member and verify cordiality")
    _add_family_options(p)
    p.add_argument("--pattern", choices=PATTERNS, default="theorem")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--repair", action="store_true",
                   help="search for a cordial labeling if the schedule fails")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=500_000)
    p.add_argument("--report-out", default="-")
    _add_out(p)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling file against a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    _add_out(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-snark", help="run the full snark certificate")
    _add_family_options(p, required=False)
    p.add_argument("--graph", default=None, help="graph JSON file instead of a family")
    _add_out(p)
    p.set_defaults(func=cmd_check_snark)

    p = sub.add_parser("search", help="search for a cordial labeling")
    _add_family_options(p, required=False)
    p.add_argument("--graph", default=None, help="graph JSON file instead of a family")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=500_000)
    _add_out(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export", help="convert a graph JSON file to another format")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--labeling", default=None, help="optional labeling JSON file")
    p.add_argument("--format", choices=FORMATS, default="json")
    _add_out(p)
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # check-snark and search accept either --graph or --family; relax the
    # required --family when a graph file is supplied.
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
