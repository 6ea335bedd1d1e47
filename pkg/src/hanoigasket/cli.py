"""Command-line interface.

Words are written most significant first: the leftmost character is the
largest disc (Hanoi, pegs 0/1/2) or the top-level triangle (gasket, T/L/R).

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import analysis, oracle
from .core import (
    HanoiError,
    MovePath,
    Verdict,
    check_lengths,
    parse_gasket_word,
    parse_hanoi_word,
)
from .machine import CORE_TABLE, corrupt_table, run_machine, run_machine_hanoi
from .pathfinder import SymbolCounter, both_alternative_costs, p2_moves

MAX_PATH_N = 30


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _parse_pair(args):
    parse = parse_hanoi_word if args.coords == "hanoi" else parse_gasket_word
    x = parse(args.src)
    y = parse(args.dst)
    check_lengths(x, y)
    return x, y


def _run(args):
    x, y = _parse_pair(args)
    if args.coords == "hanoi":
        return run_machine_hanoi(x, y)
    return run_machine(x, y)


def cmd_distance(args) -> int:
    run = _run(args)
    _emit({"distance": run.distance, "verdict": run.verdict.value}, args.format, str(run.distance))
    return 0


def cmd_decide(args) -> int:
    decision = _run(args).decision
    text = (
        f"{decision.verdict.value} prefix_discarded={decision.prefix_discarded} "
        f"core_pairs_read={decision.core_pairs_read}"
    )
    _emit(decision.to_json(), args.format, text)
    return 0


def cmd_path(args) -> int:
    x = parse_hanoi_word(args.src)
    y = parse_hanoi_word(args.dst)
    check_lengths(x, y)
    if len(x) > MAX_PATH_N:
        print(
            f"error: path output refused for n={len(x)} > {MAX_PATH_N}; "
            "use `distance --coords hanoi` for the length only",
            file=sys.stderr,
        )
        return 1
    run = run_machine_hanoi(x, y, with_distance=False)
    moves = p2_moves(x, y, run.verdict)
    path = MovePath(x, tuple(moves))
    draw = run.verdict is Verdict.DRAW
    if args.format == "json":
        obj = path.to_json()
        obj["length"] = len(moves)
        obj["verdict"] = run.verdict.value
        if draw:
            obj["draw"] = True
        print(json.dumps(obj, sort_keys=True))
    else:
        if draw:
            print("draw: both alternatives are shortest, showing alternative 1", file=sys.stderr)
        if moves:
            print(path.render_text())
    return 0


def cmd_verify(args) -> int:
    if args.max_n > oracle.MAX_VERIFY_N:
        raise UsageError(f"--max-n is capped at {oracle.MAX_VERIFY_N}")
    table = corrupt_table() if args.inject_fault else CORE_TABLE
    report = oracle.verify_suite(args.max_n, table)
    print(report.render())
    return 0 if report.passed else 2


def cmd_stats(args) -> int:
    if args.constants:
        out = analysis.exact_constants()
    elif args.simulate:
        stats = analysis.simulate_stopping_time(args.n, args.samples, args.seed, workers=args.workers)
        out = stats.to_json()
    elif args.finite_reads:
        out = {"n": args.n, "expected_reads": analysis.format_rational(analysis.expected_reads_finite(args.n))}
    elif args.average:
        mode = "exact" if args.samples == 0 else "sampled"
        out = analysis.average_pair_distance(args.n, mode, args.samples, args.seed, workers=args.workers).to_json()
    else:
        raise UsageError("choose one of --constants, --simulate, --finite-reads, --average")
    print(json.dumps(out, sort_keys=True))
    return 0


def _random_hanoi_pairs(n: int, samples: int, seed: int):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < samples:
        x = tuple(int(v) for v in rng.integers(0, 3, n))
        y = tuple(int(v) for v in rng.integers(0, 3, n))
        if x != y:
            out.append((x, y))
    return out


def bench(n: int, samples: int, seed: int) -> dict:
    pairs = _random_hanoi_pairs(n, samples, seed)

    t0 = time.perf_counter()
    machine_reads = 0
    for x, y in pairs:
        machine_reads += run_machine_hanoi(x, y).symbols_read
    t1 = time.perf_counter()
    counter = SymbolCounter()
    for x, y in pairs:
        both_alternative_costs(x, y, counter)
    t2 = time.perf_counter()
    return {
        "n": n,
        "samples": samples,
        "seed": seed,
        "machine_symbol_reads": machine_reads,
        "baseline_symbol_reads": counter.count,
        "ratio": counter.count / machine_reads,
        "machine_seconds": t1 - t0,
        "baseline_seconds": t2 - t1,
    }


def cmd_bench(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    result = bench(args.n, args.samples, args.seed)
    # wall-clock times vary between runs; keep stdout reproducible
    timing = {k: result.pop(k) for k in ("machine_seconds", "baseline_seconds")}
    print(
        f"machine {timing['machine_seconds']:.3f}s, baseline {timing['baseline_seconds']:.3f}s",
        file=sys.stderr,
    )
    text = (
        f"machine_symbol_reads={result['machine_symbol_reads']} "
        f"baseline_symbol_reads={result['baseline_symbol_reads']} ratio={result['ratio']:.4f}"
    )
    _emit(result, args.format, text)
    return 0


def cmd_export(args) -> int:
    if args.n > oracle.MAX_DOT_N:
        raise UsageError(f"--n is capped at {oracle.MAX_DOT_N} for DOT export")
    sys.stdout.write(oracle.export_dot(oracle.build_graph(args.n, args.kind)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hanoigasket",
        description="Shortest paths in the Tower of Hanoi / Sierpinski gasket graphs. "
        "Words list the largest disc (most significant symbol) first.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--from", dest="src", required=True, help="start word")
        p.add_argument("--to", dest="dst", required=True, help="target word")
        p.add_argument("--coords", choices=["hanoi", "sg"], required=True,
                       help="hanoi: pegs 0/1/2; sg: gasket symbols T/L/R")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.set_defaults(func=func)
        return p

    pair_command("distance", cmd_distance, "length of a shortest path")
    pair_command("decide", cmd_decide, "does the largest differing disc move once or twice")

    p = sub.add_parser("path", help="explicit shortest path (Hanoi coordinates)")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("verify", help="cross-check against brute-force BFS")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="exact constants and simulations")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--constants", action="store_true")
    mode.add_argument("--simulate", action="store_true")
    mode.add_argument("--finite-reads", action="store_true")
    mode.add_argument("--average", action="store_true",
                      help="average pair distance; exact when --samples is 0")
    p.add_argument("--n", type=int, default=30)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bench", help="symbol reads: automaton vs both-alternatives baseline")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("export", help="DOT export of H_n or SG_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["sg", "hanoi"], required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HanoiError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
