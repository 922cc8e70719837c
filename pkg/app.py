"""
Cubic Edge-Coloring Toolkit - command-line entry point

Exact nu_k computation, factor extension, claim verification with
re-checkable certificates, cubic multigraph generation and extremal search.
Machine output goes to stdout as JSON lines (graphs for `gen`); everything
meant for people goes to stderr.
"""

import argparse
import json
import shlex
import sys
from typing import Any

from components.action_log import render_action_log
from components.run_report import RunReport, render_run_report
from config import TOOLKIT_VERSION, default_jobs
from services.coloring_service import nu, validate
from services.generator_service import GenConfig, GenMode, enumerate_cubic, generate
from services.kempe_service import extend_avoiding, extend_one_factor
from services.matching_service import OneFactor, find_one_factor, is_perfect_matching, maximum_matching
from services.verify_service import CHECKERS, canon, run_campaign, search_extremal
from utils.certificate import Certificate, Claim, Verdict
from utils.errors import CapExceededError, ClassificationViolation, GraphError, PreconditionError
from utils.graph_io import GraphFormat, format_edgelist, graph_to_json, read_graph, read_graphs
from utils.logger import log_error, log_generated, log_nu
from utils.multigraph import MultiGraph, hash_hex

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NO_FACTOR = 3
EXIT_VIOLATION = 4
EXIT_COUNTEREXAMPLE = 5

CLAIM_NAMES = ["t1", "t2", "t3", "t5", "bounds", "conjecture", "f2"]


def emit(payload: dict[str, Any]):
    """Write one JSON line to stdout."""
    print(json.dumps(payload, separators=(",", ":")))


def load_graph(args) -> MultiGraph:
    if args.canon:
        return canon(args.canon).graph
    return read_graph(args.input, GraphFormat(args.format))


def read_factor(g: MultiGraph, path: str) -> OneFactor:
    """Map an edge-list file of vertex pairs onto edge ids of g."""
    pairs = read_graph(path).endpoints
    edges = set()
    for u, v in pairs:
        candidates = [e for e in g.edges_between(u, v) if e not in edges] if u < g.n and v < g.n else []
        if not candidates:
            raise PreconditionError(f"factor pair ({u}, {v}) is not an edge of the graph")
        edges.add(candidates[0])
    factor = frozenset(edges)
    if not is_perfect_matching(g, factor):
        raise PreconditionError(f"factor edges {sorted(factor)} are not a perfect matching")
    return OneFactor(factor)


def cmd_nu(args) -> int:
    g = load_graph(args)
    record = nu(g, args.k)
    log_nu(args.k, record.value, hash_hex(g))
    emit({"hash": hash_hex(g), **record.to_json()})
    return EXIT_OK


def cmd_extend(args) -> int:
    g = load_graph(args)
    claim = Claim.T2 if args.mode == "contain" else Claim.T3

    if args.factor:
        factor = read_factor(g, args.factor)
    else:
        factor = find_one_factor(g)
        if factor is None:
            cert = Certificate(claim, g, Verdict.PASS, {
                "nu3": nu(g, 3).value,
                "extensions": [],
                "note": "no 1-factor",
                "maximum_matching": sorted(maximum_matching(g)),
            })
            emit(cert.to_json())
            print("Graph has no 1-factor; nothing to extend.", file=sys.stderr)
            return EXIT_NO_FACTOR

    extend = extend_one_factor if args.mode == "contain" else extend_avoiding
    c = extend(g, factor)
    report = {
        "valid": validate(c),
        "size": c.size,
        "nu3": nu(g, 3).value,
        "factor_colored": factor.edges <= c.colored_edges(),
        "uncolored_in_factor": set(c.uncolored_edges()) <= factor.edges,
    }
    emit({
        "mode": args.mode,
        "graph": graph_to_json(g),
        "factor": factor.sorted_edges(),
        "coloring": c.to_json(),
        "report": report,
    })
    return EXIT_OK


def corpus(args) -> list[MultiGraph]:
    if args.canon:
        return [canon(args.canon).graph]
    if args.input:
        return read_graphs(args.input)
    graphs = []
    for n in range(2, args.all_n + 1, 2):
        graphs.extend(enumerate_cubic(GenConfig(n), args.jobs))
    return graphs


def cmd_verify(args, report: RunReport) -> int:
    certificates = run_campaign(corpus(args), CHECKERS[args.claim], args.jobs)
    for cert in certificates:
        emit(cert.to_json())
    report.add(certificates)

    if all(cert.passed for cert in certificates) or args.claim == "f2":
        return EXIT_OK
    if args.claim == "conjecture":
        print("Counterexample to the conjecture found; see FAIL certificates.", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_FAILED


def cmd_gen(args) -> int:
    if args.all:
        cfg = GenConfig(args.n, GenMode.EXHAUSTIVE, connected_only=not args.disconnected, simple_only=args.simple)
    else:
        cfg = GenConfig(
            args.n, GenMode.RANDOM, count=args.count, seed=args.seed,
            connected_only=not args.disconnected, simple_only=args.simple,
        )
    count = 0
    for g in generate(cfg, args.jobs):
        if count:
            print("#")
        sys.stdout.write(format_edgelist(g))
        count += 1
    log_generated(count, args.n, cfg.mode.value)
    print(f"{count} graphs on {args.n} vertices", file=sys.stderr)
    return EXIT_OK


def cmd_search(args, report: RunReport) -> int:
    certificates = search_extremal(args.max_n, args.jobs)
    for cert in certificates:
        emit(cert.to_json())
    report.add(certificates)
    return EXIT_OK


def add_graph_source(parser: argparse.ArgumentParser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", metavar="FILE", help="graph file")
    source.add_argument("--canon", metavar="NAME", help="canonical graph: THETA, K4, K33, PETERSEN, S6")
    parser.add_argument("--format", choices=[f.value for f in GraphFormat], default="edgelist")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubic", description="Maximum k-edge-colorable subgraphs of cubic graphs")
    parser.add_argument("--version", action="version", version=TOOLKIT_VERSION)
    parser.add_argument("--log", action="store_true", help="print the action log to stderr at exit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nu", help="exact nu_k with a witness")
    p.add_argument("--k", type=int, choices=[1, 2, 3], required=True)
    add_graph_source(p)

    p = sub.add_parser("extend", help="extend a 1-factor into a maximum 3-edge-colorable subgraph")
    p.add_argument("--mode", choices=["contain", "avoid"], required=True)
    p.add_argument("--factor", metavar="FILE", help="edge-list of a perfect matching")
    add_graph_source(p)

    p = sub.add_parser("verify", help="check a claim and emit certificates")
    p.add_argument("--claim", choices=CLAIM_NAMES, required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", metavar="FILE", help="edge-list file with one or more graphs")
    source.add_argument("--canon", metavar="NAME")
    source.add_argument("--all-n", type=int, metavar="N", help="every connected cubic multigraph up to N vertices")
    p.add_argument("--jobs", type=int, default=default_jobs())

    p = sub.add_parser("gen", help="generate cubic multigraphs")
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--all", action="store_true", help="every graph up to isomorphism")
    mode.add_argument("--count", type=int, help="number of random samples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["edgelist"], default="edgelist")
    p.add_argument("--simple", action="store_true", help="skip graphs with parallel edges")
    p.add_argument("--disconnected", action="store_true", help="allow disconnected graphs")
    p.add_argument("--jobs", type=int, default=default_jobs())

    p = sub.add_parser("search", help="search for extremal graphs")
    p.add_argument("--extremal", action="store_true", required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=default_jobs())

    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Run one command.

    Returns:
        The process exit code
    """
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    report = RunReport(command="cubic " + shlex.join(argv))
    try:
        if args.command == "nu":
            code = cmd_nu(args)
        elif args.command == "extend":
            code = cmd_extend(args)
        elif args.command == "verify":
            code = cmd_verify(args, report)
        elif args.command == "gen":
            code = cmd_gen(args)
        else:
            code = cmd_search(args, report)
    except ClassificationViolation as exc:
        log_error(str(exc), {"command": args.command})
        emit({"error": "classification violated", "message": str(exc), "trace": exc.trace})
        print(f"Classification violated: {exc}", file=sys.stderr)
        code = EXIT_VIOLATION
    except (GraphError, PreconditionError, CapExceededError, OSError) as exc:
        log_error(str(exc), {"command": args.command})
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        code = EXIT_USAGE

    if args.command in ("verify", "search"):
        report.finish()
        render_run_report(report)
    if args.log:
        render_action_log()
    return code


if __name__ == "__main__":
    sys.exit(main())
