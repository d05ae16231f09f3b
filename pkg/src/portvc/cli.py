"""Command-line interface: run, gen, oracle, sweep, verify.

All reports are JSON on stdout; ratios are exact rational strings, never
floats, so reruns are byte-identical. Exit codes: 0 ok, 1 usage, 2 parse,
3 invariant violation, 4 oracle refusal, 5 I/O.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import graph, oracle, simulator
from .checks import analyze
from .errors import AnalysisFault, GraphError, OracleRefusal, ParseError, ProtocolFault

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_ORACLE = 4
EXIT_IO = 5


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        raise _UsageError(message)


def _ratio_str(r: Fraction | None) -> str | None:
    if r is None:
        return None
    return f"{r.numerator}/{r.denominator}"


def _load_graph(path: str, fmt: str, policy: str, seed: int | None) -> graph.PortGraph:
    with open(path) as fh:
        text = fh.read()
    if fmt == "pg":
        return graph.parse(text)
    el = graph.parse_edge_list(text)
    return graph.from_edge_list(el, policy, seed)


def _report_for(g: graph.PortGraph, with_oracle: bool) -> tuple[dict, bool]:
    ra = analyze(g)
    cert = ra.certificate
    report = {
        "n": g.node_count,
        "m": g.num_edges,
        "delta": g.max_degree,
        "cover_size": ra.result.cover_size,
        "lower_bound": cert.lower_bound if cert else 0,
        "certified_ratio": _ratio_str(cert.certified_ratio) if cert else None,
        "rounds_run": ra.result.rounds_run,
        "last_active_step": ra.result.last_active_step,
        "cover": sorted(ra.result.cover),
        "checks": {name: ("pass" if ok else "fail") for name, ok in ra.checks.items()},
    }
    if with_oracle:
        res = oracle.solve(g)
        report["oracle_size"] = res.optimum_size
        report["true_ratio"] = (
            _ratio_str(Fraction(ra.result.cover_size, res.optimum_size))
            if res.optimum_size > 0
            else None
        )
    return report, ra.all_pass


def cmd_run(args) -> int:
    g = _load_graph(args.input, args.format, args.numbering, args.seed)
    report, all_pass = _report_for(g, args.with_oracle)
    if args.trace:
        _, transcript = simulator.run(g)
        with open(args.trace, "w") as fh:
            fh.write(simulator.format_transcript(transcript))
    print(json.dumps(report))
    return EXIT_OK if all_pass else EXIT_INVARIANT


def cmd_gen(args) -> int:
    el = graph.generate(args.kind, *args.params, seed=args.seed)
    text = graph.serialize_edge_list(el)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.input, args.format, args.numbering, args.seed)
    res = oracle.solve(g, cap=args.cap)
    print(json.dumps({
        "n": g.node_count,
        "m": g.num_edges,
        "optimum_size": res.optimum_size,
        "optimum_cover": sorted(res.optimum_cover),
        "explored_nodes": res.explored_nodes,
    }))
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.trials < 1:
        raise _UsageError("--trials must be >= 1")
    with open(args.input) as fh:
        text = fh.read()
    if args.format == "pg":
        base = graph.parse(text)
    else:
        base = graph.from_edge_list(graph.parse_edge_list(text), "sorted")

    sizes = []
    max_ratio: Fraction | None = None
    failing_seed = None
    for trial in range(args.trials):
        trial_seed = args.seed + trial
        g = graph.permute_ports(base, trial_seed)
        ra = analyze(g)
        cert = ra.certificate
        ratio = cert.certified_ratio if cert else None
        if ratio is not None and (max_ratio is None or ratio > max_ratio):
            max_ratio = ratio
        sizes.append(ra.result.cover_size)
        line = {
            "trial": trial,
            "seed": trial_seed,
            "cover_size": ra.result.cover_size,
            "certified_ratio": _ratio_str(ratio),
            "checks_pass": ra.all_pass,
        }
        print(json.dumps(line))
        if not ra.all_pass and failing_seed is None:
            failing_seed = trial_seed
    mean = Fraction(sum(sizes), len(sizes))
    summary = {
        "trials": args.trials,
        "n": base.node_count,
        "m": base.num_edges,
        "cover_size_min": min(sizes),
        "cover_size_max": max(sizes),
        "cover_size_mean": _ratio_str(mean),
        "max_certified_ratio": _ratio_str(max_ratio),
        "all_checks_pass": failing_seed is None,
        "failing_seed": failing_seed,
    }
    print(json.dumps(summary))
    return EXIT_OK if failing_seed is None else EXIT_INVARIANT


def cmd_verify(args) -> int:
    g = _load_graph(args.input, args.format, args.numbering, args.seed)
    with open(args.trace) as fh:
        entries = simulator.parse_transcript(fh.read())
    violations = simulator.replay(g, entries)
    print(json.dumps({"violations": violations}))
    return EXIT_OK if not violations else EXIT_INVARIANT


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="input graph file")
    p.add_argument("--format", choices=("pg", "el"), default="el")
    p.add_argument("--numbering", choices=graph.NUMBERING_POLICIES, default="sorted",
                   help="port numbering policy for .el inputs")
    p.add_argument("--seed", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run the cover algorithm and all checks")
    _add_input_flags(p_run)
    p_run.add_argument("--trace", help="write the transcript to this path")
    p_run.add_argument("--with-oracle", action="store_true",
                       help="also solve exactly and report the true ratio")
    p_run.set_defaults(func=cmd_run)

    p_gen = sub.add_parser("gen", help="generate a graph as an .el file")
    p_gen.add_argument("kind", choices=("cycle", "path", "clique", "star", "random"))
    p_gen.add_argument("params", nargs="*")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--output", "-o", help="output path (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_oracle = sub.add_parser("oracle", help="exact minimum vertex cover")
    _add_input_flags(p_oracle)
    p_oracle.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p_oracle.set_defaults(func=cmd_oracle)

    p_sweep = sub.add_parser("sweep", help="rerun under many port numberings")
    _add_input_flags(p_sweep)
    p_sweep.add_argument("--trials", type=int, default=10)
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="replay a transcript against a graph")
    _add_input_flags(p_verify)
    p_verify.add_argument("--trace", required=True)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "command", None) == "sweep" and args.seed is None:
        args.seed = 0
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleRefusal as exc:
        print(f"oracle refusal: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (AnalysisFault, ProtocolFault) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except GraphError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
