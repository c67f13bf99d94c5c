"""Command line entry point: ``idealgraph {classify,graph,hamiltonian,pancyclic,sweep}``.

Exit codes: 0 success, 1 usage/parse/cap error, 2 a prediction disagrees with
an oracle, 3 the ring is not Hamiltonian (``hamiltonian`` / ``pancyclic``).
"""

from __future__ import annotations

import argparse
import json
import sys

from .caps import CapExceededError
from .classify import classify_report
from .graph import build_intersection_graph, export_dot, validate_cycle
from .hamcycle import construct_hamiltonian, pancyclic_family
from .rings import RingSpecError, parse_ring_spec
from .sweep import SweepConfig, run_sweep

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_NOT_HAMILTONIAN = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_classify(args) -> int:
    report = classify_report(parse_ring_spec(args.spec), oracle_limit=args.oracle_cap)
    _emit(report.to_json() if args.format == "json" else report.to_text())
    return report.exit_code


def cmd_graph(args) -> int:
    g = build_intersection_graph(parse_ring_spec(args.spec))
    if args.json:
        _emit(json.dumps(g.to_dict(), indent=2))
    else:
        _emit(export_dot(g, labels=args.labels))
    return EXIT_OK


def cmd_hamiltonian(args) -> int:
    spec = parse_ring_spec(args.spec)
    outcome = construct_hamiltonian(spec, oracle_limit=args.oracle_cap)
    g = outcome.graph
    valid = outcome.witness is not None and bool(validate_cycle(g, outcome.witness))
    if args.format == "json":
        out = outcome.to_dict()
        out.update(spec=str(spec), valid=valid, vertex_count=g.order)
        _emit(json.dumps(out, indent=2))
    else:
        lines = [f"spec: {spec}", f"vertices: {g.order}", f"status: {outcome.status}",
                 f"strategy: {outcome.strategy}"]
        if outcome.tag:
            lines.append(f"tag: {outcome.tag}")
        if outcome.note:
            lines.append(f"note: {outcome.note}")
        if outcome.witness is not None:
            lines.append(f"cycle ({len(outcome.witness)}): " + " ~ ".join(g.label(v) for v in outcome.witness))
            lines.append(f"valid: {valid}")
        _emit("\n".join(lines))
    return EXIT_OK if outcome.status == "cycle" else EXIT_NOT_HAMILTONIAN


def cmd_pancyclic(args) -> int:
    spec = parse_ring_spec(args.spec)
    outcome = construct_hamiltonian(spec, oracle_limit=args.oracle_cap)
    if outcome.status != "cycle":
        sys.stderr.write(f"{spec}: not Hamiltonian ({outcome.tag or outcome.note})\n")
        return EXIT_NOT_HAMILTONIAN
    fam = pancyclic_family(spec, oracle_limit=args.oracle_cap)
    g = fam.graph
    if args.format == "json":
        _emit(json.dumps(fam.to_dict(), indent=2))
    else:
        lines = [f"spec: {spec}", f"vertices: {g.order}"]
        for L, w in fam.cycles.items():
            ok = "valid" if validate_cycle(g, w) else "INVALID"
            lines.append(f"  {L:>3} [{fam.methods[L]}, {ok}]: " + " ~ ".join(g.label(v) for v in w))
        lines.append(f"gaps: {list(fam.gaps)}")
        _emit("\n".join(lines))
    return EXIT_OK if not fam.gaps else EXIT_DISAGREE


def _pair(text: str) -> tuple[int, int]:
    q, d = text.split(",")
    return int(q), int(d)


def cmd_sweep(args) -> int:
    config = SweepConfig(
        max_vertices=args.max_vertices,
        block_budget=args.block_budget,
        q_values=tuple(args.q_values),
        chain_k_max=args.chain_k_max,
        vs_params=tuple(args.vs),
        parallel=args.parallel,
        oracle_cap=args.oracle_cap,
        fields_only=args.fields_only,
    )
    result = run_sweep(config, timestamp=not args.no_timestamp)
    _emit(result.to_json() if args.format == "json" else result.summary())
    unexplained = [d for d in result.discrepancies if "open question" not in (d["note"] or "")]
    return EXIT_DISAGREE if unexplained else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="idealgraph", description="Intersection graphs of ideals of finite commutative rings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt=True):
        p.add_argument("--oracle-cap", type=int, default=None,
                       help="vertex cap of the Hamiltonian oracle (env IDEALGRAPH_ORACLE_CAP)")
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("classify", help="run every prediction/oracle check on one ring")
    p.add_argument("spec")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("graph", help="print the intersection graph")
    p.add_argument("spec")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--dot", action="store_true", help="Graphviz output (default)")
    mode.add_argument("--json", action="store_true")
    p.add_argument("--labels", choices=("index", "ideal"), default="ideal")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("hamiltonian", help="construct a Hamiltonian cycle")
    p.add_argument("spec")
    common(p)
    p.set_defaults(func=cmd_hamiltonian)

    p = sub.add_parser("pancyclic", help="cycles of every length 3..V")
    p.add_argument("spec")
    common(p)
    p.set_defaults(func=cmd_pancyclic)

    p = sub.add_parser("sweep", help="check every small catalog ring")
    defaults = SweepConfig()
    p.add_argument("--max-vertices", type=int, default=defaults.max_vertices)
    p.add_argument("--block-budget", type=int, default=defaults.block_budget)
    p.add_argument("--q-values", type=int, nargs="+", default=list(defaults.q_values))
    p.add_argument("--chain-k-max", type=int, default=defaults.chain_k_max)
    p.add_argument("--vs", type=_pair, nargs="*", default=list(defaults.vs_params), metavar="Q,D")
    p.add_argument("--fields-only", action="store_true")
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--no-timestamp", action="store_true")
    common(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RingSpecError, CapExceededError, ValueError) as exc:
        sys.stderr.write(f"idealgraph: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
