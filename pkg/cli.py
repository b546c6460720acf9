#!/usr/bin/env python3
"""
Command-line entry point

    python cli.py simulate circuit.txt --format json --verify
    python cli.py bench --qubits 16 32 64 --degrees 2 4 8
    python cli.py magic --max-qubits 6
"""

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

import logfire

from bench import magic_state_counts, run_bench
from circuit import CircuitError, parse_circuit
from gates import C3_GATES
from oracle import DEFAULT_CAP, OracleCapError, simulate_dense, sum_to_vector, vector_to_pairs
from report import ReportOptions, emit_report
from runner import RunOptions, SimulationError, run_circuit

logging.basicConfig(level=logging.WARNING)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VERIFY_FAILED = 2

_logfire_configured = False


def configure_logfire():
    """Send to Logfire only when a write token is present"""
    global _logfire_configured
    if _logfire_configured:
        return
    _logfire_configured = True
    token = os.environ.get('LOGFIRE_WRITE_TOKEN')
    if token:
        logfire.configure(token=token, service_name='c3-graphsim', console=False)
        logger.info('Logfire initialized for simulator CLI')
    else:
        logfire.configure(send_to_logfire=False, console=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="c3-graphsim",
        description="Exact Clifford + third-level gate simulator on sums of graph states",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="simulate a circuit file")
    sim.add_argument("file", help="circuit file ('-' for stdin)")
    sim.add_argument("--format", choices=["text", "json"], default="text")
    sim.add_argument("--verify", action="store_true", help="compare against dense replay")
    sim.add_argument("--amplitudes", action="store_true", help="include dense amplitudes")
    sim.add_argument("--no-merge", action="store_true", help="skip collecting and merging")
    sim.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP, help="dense qubit cap")
    sim.add_argument("--stats", action="store_true", help="full statistics in text output")

    bench = sub.add_parser("bench", help="time one third-level gate on random graphs")
    bench.add_argument("--qubits", type=int, nargs="+", default=[16, 32, 64])
    bench.add_argument("--degrees", type=float, nargs="+", default=[2.0, 4.0, 8.0])
    bench.add_argument("--gate", choices=sorted(C3_GATES), default="CCZ")
    bench.add_argument("--samples", type=int, default=25)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--format", choices=["text", "json"], default="text")

    magic = sub.add_parser("magic", help="term counts of T on every qubit of |+...+⟩")
    magic.add_argument("--max-qubits", type=int, default=6)
    magic.add_argument("--no-merge", action="store_true")
    magic.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def cmd_simulate(args) -> int:
    try:
        circuit = parse_circuit(_read_source(args.file))
    except OSError as e:
        logger.error(f"Cannot read {args.file}: {e}")
        print(f"❌ Cannot read {args.file}: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except CircuitError as e:
        logger.error(f"Invalid circuit {args.file}: {e}")
        print(f"❌ {args.file}: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    if (args.verify or args.amplitudes) and circuit.n > args.oracle_cap:
        message = (
            f"--verify/--amplitudes need the dense oracle; {circuit.n} qubits exceeds "
            f"the cap of {args.oracle_cap} (raise it with --oracle-cap)"
        )
        logger.error(message)
        print(f"❌ {message}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    opts = RunOptions(merge=not args.no_merge)
    try:
        state, stats = run_circuit(circuit, opts)
    except SimulationError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    amplitudes = None
    verified = None
    try:
        if args.amplitudes or args.verify:
            vector = sum_to_vector(state, args.oracle_cap)
            if args.amplitudes:
                amplitudes = vector_to_pairs(vector)
            if args.verify:
                verified = vector == simulate_dense(circuit, args.oracle_cap)
    except OracleCapError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    report_opts = ReportOptions(format=args.format, show_stats=args.stats)
    print(emit_report(state, stats, report_opts, amplitudes=amplitudes, verified=verified))

    if verified is False:
        logger.error(f"Verification failed for {args.file}")
        logfire.error(
            'Verification failed',
            service='simulator',
            event_type='verify_failed',
            file=args.file,
        )
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_bench(args) -> int:
    report = run_bench(args.qubits, args.degrees, args.gate, args.samples, args.seed)
    if args.format == "json":
        print(report.model_dump_json(indent=2))
        return EXIT_OK
    print(f"{args.gate}: median time of one application on a single term")
    print(f"{'qubits':>8} {'degree':>8} {'median µs':>12}")
    for p in report.points:
        print(f"{p.qubits:>8} {p.degree:>8.1f} {p.median_seconds * 1e6:>12.1f}")
    if report.ratios:
        print()
        print("doubling ratios (≤ 2.5 expected for linear scaling in n·d):")
        for r in report.ratios:
            flag = "✅" if r.within_limit else "⚠️ "
            print(f"  {flag} {r.axis} {r.from_value:g} -> {r.to_value:g}: {r.ratio:.2f}x")
    return EXIT_OK


def cmd_magic(args) -> int:
    counts = magic_state_counts(args.max_qubits, merge=not args.no_merge)
    if args.format == "json":
        print(json.dumps([c.model_dump() for c in counts], indent=2))
        return EXIT_OK
    print(f"{'qubits':>8} {'terms':>8} {'peak':>8}")
    for c in counts:
        print(f"{c.qubits:>8} {c.terms:>8} {c.peak_terms:>8}")
    return EXIT_OK


COMMANDS = {"simulate": cmd_simulate, "bench": cmd_bench, "magic": cmd_magic}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.INFO)
    configure_logfire()
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
