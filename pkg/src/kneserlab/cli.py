"""Command-line surface: build graphs, run UCEP checks, verify fixtures,
cross-validate against the coset model, and export graphs.

Exit codes: 0 ok/holds, 2 usage error, 3 UCEP fails (with witness),
4 fixture-integrity error, 5 cross-validation mismatch. All inputs come
from flags (no environment variables), so a full command line reproduces
a run bytewise, including the sampling seed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .buildings import BuildingSpec, build_graph
from .coclique import check_ucep
from .crossval import cross_validate
from .errors import (
    CrossValidationError,
    FixtureIntegrityError,
    KneserlabError,
    UsageError,
)
from .fixtures import CASES, verify_nonexample

SCHEMA = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UCEP_FAILS = 3
EXIT_FIXTURE = 4
EXIT_CROSSVAL = 5


def _spec_from_args(args):
    if args.family is None or args.rank is None or args.type is None or args.p is None:
        raise UsageError("--family, --rank, --type and --p are all required")
    try:
        types = tuple(int(t) for t in args.type.split(","))
    except ValueError:
        raise UsageError("--type must be a comma-separated list of integers")
    selector = getattr(args, "selector", None)
    return BuildingSpec(args.family, args.rank, args.p, types, selector)


def graph_to_dict(graph):
    return {
        "schema": SCHEMA,
        "spec": graph.spec.to_dict(),
        "num_vertices": graph.num_vertices,
        "vertices": [
            [[list(row) for row in part.basis] for part in flag]
            for flag in graph.vertices
        ],
        "sigma": list(graph.sigma),
        "edges": [[i, j] for i, j in graph.edges()],
    }


def graph_to_dimacs(graph):
    lines = ["c kneserlab graph"]
    lines.append("c spec %s" % json.dumps(graph.spec.to_dict(), sort_keys=True))
    lines.append("c sigma %s" % " ".join(str(i + 1) for i in graph.sigma))
    edges = list(graph.edges())
    lines.append("p edge %d %d" % (graph.num_vertices, len(edges)))
    for i, j in edges:
        lines.append("e %d %d" % (i + 1, j + 1))
    return "\n".join(lines) + "\n"


def graph_to_text(graph):
    lines = [
        "spec: %s" % json.dumps(graph.spec.to_dict(), sort_keys=True),
        "vertices: %d" % graph.num_vertices,
        "edges: %d" % graph.num_edges(),
        "apartment vertices: %d" % len(graph.sigma),
    ]
    return "\n".join(lines) + "\n"


def _render_graph(graph, fmt):
    if fmt == "json":
        return json.dumps(graph_to_dict(graph), sort_keys=True) + "\n"
    if fmt == "dimacs":
        return graph_to_dimacs(graph)
    if fmt == "text":
        return graph_to_text(graph)
    raise UsageError("unknown format %r" % fmt)


def _write(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as handle:
            handle.write(text)


def cmd_build(args):
    spec = _spec_from_args(args)
    graph = build_graph(spec)
    _write(_render_graph(graph, args.format), args.output)
    return EXIT_OK


def cmd_check_ucep(args):
    if args.case_from_fixture:
        report = verify_nonexample(args.case_from_fixture, p=args.p)
        report["ucep"] = "fails"
        _write(json.dumps(report, sort_keys=True) + "\n", args.output)
        return EXIT_UCEP_FAILS
    spec = _spec_from_args(args)
    graph = build_graph(spec)
    report = check_ucep(
        graph, mode=args.mode, samples=args.samples, seed=args.seed, jobs=args.jobs
    )
    _write(json.dumps(report.to_dict(), sort_keys=True) + "\n", args.output)
    return EXIT_OK if report.verdict == "holds" else EXIT_UCEP_FAILS


def cmd_verify_fixtures(args):
    cases = [args.case] if args.case else list(CASES)
    reports = []
    for case in cases:
        reports.append(verify_nonexample(case, p=args.p if args.case else None))
    payload = {"schema": SCHEMA, "fixtures": reports, "certified": len(reports)}
    _write(json.dumps(payload, sort_keys=True) + "\n", args.output)
    return EXIT_OK


def cmd_cross_validate(args):
    spec = _spec_from_args(args)
    if spec.rank > 4:
        raise UsageError("cross-validation is limited to rank <= 4")
    report = cross_validate(spec.family, spec.rank, spec.types, spec.p)
    _write(json.dumps(report, sort_keys=True) + "\n", args.output)
    if not report["ok"]:
        raise CrossValidationError(report["mismatch"])
    return EXIT_OK


def cmd_export(args):
    with open(args.input) as handle:
        data = json.load(handle)
    if data.get("schema") != SCHEMA:
        raise UsageError("unsupported graph schema %r" % data.get("schema"))
    from .algebra import Subspace
    from .buildings import KneserGraph

    spec = BuildingSpec(
        data["spec"]["family"],
        data["spec"]["rank"],
        data["spec"]["p"],
        tuple(data["spec"]["types"]),
        data["spec"].get("selector"),
    )
    p = spec.p
    vertices = []
    for flag in data["vertices"]:
        parts = []
        for mat in flag:
            ambient = len(mat[0])
            parts.append(Subspace(ambient, p, tuple(tuple(r) for r in mat)))
        vertices.append(tuple(parts))
    adjacency = [0] * len(vertices)
    for i, j in data["edges"]:
        adjacency[i] |= 1 << j
        adjacency[j] |= 1 << i
    graph = KneserGraph(spec, vertices, adjacency, data["sigma"])
    _write(_render_graph(graph, args.format), args.output)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kneserlab",
        description="Kneser graphs of buildings over small prime fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(sp):
        sp.add_argument("--family", choices=["A", "B", "C", "D", "G"])
        sp.add_argument("--rank", type=int)
        sp.add_argument("--type", help="comma-separated type set, e.g. 2 or 1,3")
        sp.add_argument("--p", type=int)
        sp.add_argument("--selector", choices=["plus", "minus"])
        sp.add_argument("--output", "-o")

    sp = sub.add_parser("build", help="build a Kneser graph and write it out")
    add_spec_flags(sp)
    sp.add_argument("--format", choices=["json", "dimacs", "text"], default="json")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("check-ucep", help="decide UCEP for a building spec")
    add_spec_flags(sp)
    sp.add_argument("--mode", choices=["all", "sample"], default="all")
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--case-from-fixture", choices=list(CASES))
    sp.set_defaults(func=cmd_check_ucep)

    sp = sub.add_parser("verify-fixtures", help="certify the counterexample fixtures")
    sp.add_argument("--case", choices=list(CASES))
    sp.add_argument("--p", type=int)
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_verify_fixtures)

    sp = sub.add_parser(
        "cross-validate", help="compare geometric apartment with the coset model"
    )
    add_spec_flags(sp)
    sp.set_defaults(func=cmd_cross_validate)

    sp = sub.add_parser("export", help="convert a stored JSON graph to another format")
    sp.add_argument("--input", required=True)
    sp.add_argument("--format", choices=["json", "dimacs", "text"], default="dimacs")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_export)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except FixtureIntegrityError as exc:
        print("fixture integrity error: %s" % exc, file=sys.stderr)
        return EXIT_FIXTURE
    except CrossValidationError as exc:
        print("cross-validation mismatch: %s" % exc, file=sys.stderr)
        return EXIT_CROSSVAL
    except KneserlabError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
