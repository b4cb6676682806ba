"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional, Sequence

from .audit import audit_solution
from .board import BoardError
from .closed_form import SolutionForm, expected_counts, solution_sequence
from .documents import dumps, search_document, trace_document
from .notation import ReplayError, ScriptSyntaxError, classify, format_script, parse_script, replay
from .oracle import DEFAULT_MAX_N, FeasibilityError, bfs_min_moves

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _read_moves(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    if os.path.isfile(value):
        with open(value) as fh:
            return fh.read()
    return value


def cmd_solve(args) -> int:
    script = solution_sequence(args.N, SolutionForm(args.form))
    print(format_script(script, compact=args.compact))
    if args.verify:
        trace = replay(args.N, script, track_ids=False)
        want = expected_counts(args.N)
        counts = trace.counts
        ok = (
            trace.solved
            and counts["total"] == want.total
            and counts["jumps"] == want.jumps
            and counts["steps"] == want.steps
        )
        print(f"verify: solved={trace.solved} moves={counts['total']} expected={want.total} "
              f"{'OK' if ok else 'FAIL'}", file=sys.stderr)
        return EXIT_OK if ok else EXIT_VERIFY
    return EXIT_OK


def cmd_replay(args) -> int:
    script = parse_script(_read_moves(args.moves))
    trace = replay(args.N, script)
    if args.trace:
        sys.stdout.write(dumps(trace_document(trace)))
    else:
        c = trace.counts
        print(f"final={trace.final_board.cells} solved={'yes' if trace.solved else 'no'} "
              f"moves={c['total']} steps={c['steps']} jumps={c['jumps']} "
              f"weight={trace.weight_trace[-1] if trace.moves else 0}")
    return EXIT_OK if trace.solved else EXIT_VERIFY


def cmd_oracle(args) -> int:
    result = bfs_min_moves(
        args.N, want_path=args.path, max_n=args.max_n, workers=args.workers,
        bidirectional=args.bidirectional,
    )
    expected = args.N * args.N + 2 * args.N
    ok = result.min_moves == expected
    if args.json:
        sys.stdout.write(dumps(search_document(result)))
    else:
        print(f"min_moves={result.min_moves} expected={expected} {'OK' if ok else 'MISMATCH'}")
        if result.reachable_states is not None:
            print(f"reachable_states={result.reachable_states}")
        if result.path is not None:
            for k, m in enumerate(result.path):
                print(f"{k:4d} {classify(m):>3} {m.from_index}->{m.to_index}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_audit(args) -> int:
    script = parse_script(_read_moves(args.moves))
    report = audit_solution(args.N, script)
    if args.json:
        trace = replay(args.N, script)
        sys.stdout.write(dumps(trace_document(trace, report)))
    else:
        counts = report.group_counts()
        print(f"verdict={'pass' if report.passed else 'fail'} moves={report.move_count} "
              f"first_crosses={report.first_cross_count} final_weight={report.final_weight} "
              f"implied_minimum={report.implied_minimum}")
        print("groups: " + " ".join(f"{k}={v}" for k, v in counts.items()))
        if report.failures:
            print("failed checks: " + ", ".join(report.failures))
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_table(args) -> int:
    status = EXIT_OK
    print(f"{'N':>4} {'length':>7} {'oracle':>7} match")
    for N in range(1, args.Nmax + 1):
        length = len(solution_sequence(N))
        if N <= args.oracle_max:
            found = bfs_min_moves(N, max_n=args.oracle_max).min_moves
            match = "OK" if found == length == expected_counts(N).total else "MISMATCH"
        else:
            found, match = "-", "SKIP"
        if match == "MISMATCH":
            status = EXIT_VERIFY
        print(f"{N:>4} {length:>7} {found:>7} {match}")
    return status


def cmd_bench(args) -> int:
    counts = set()
    print(f"{'run':>4} {'seconds':>9} {'expanded':>10} {'peak_frontier':>14} min_moves")
    for i in range(1, args.repeat + 1):
        t0 = time.perf_counter()
        r = bfs_min_moves(args.N, max_n=args.max_n, workers=args.workers)
        dt = time.perf_counter() - t0
        counts.add((r.min_moves, r.reachable_states, r.states_expanded))
        print(f"{i:>4} {dt:>9.3f} {r.states_expanded:>10} {r.peak_frontier:>14} {r.min_moves}")
    if len(counts) != 1:
        print("nondeterministic results across runs", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pegswap", description="Solve, search and audit the red/blue peg swap puzzle.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="print the closed-form solution")
    p.add_argument("N", type=_positive)
    p.add_argument("--form", choices=[f.value for f in SolutionForm], default="direct")
    p.add_argument("--compact", action="store_true", help="run-length encode repeated tokens")
    p.add_argument("--verify", action="store_true", help="replay and check the move counts")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("replay", help="replay a move script")
    p.add_argument("N", type=_positive)
    p.add_argument("--moves", required=True, help="script text, a file name, or - for stdin")
    p.add_argument("--trace", action="store_true", help="emit the full trace document")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("oracle", help="exact minimum by breadth-first search")
    p.add_argument("N", type=_positive)
    p.add_argument("--path", action="store_true", help="print a shortest witness path")
    p.add_argument("--max-n", type=_positive, default=DEFAULT_MAX_N)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--bidirectional", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("audit", help="check the lower-bound bookkeeping on a solution")
    p.add_argument("N", type=_positive)
    p.add_argument("--moves", required=True, help="script text, a file name, or - for stdin")
    p.add_argument("--json", action="store_true", help="emit trace and audit as a document")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("table", help="closed-form length against the search oracle")
    p.add_argument("Nmax", type=_positive)
    p.add_argument("--oracle-max", type=int, default=8)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bench", help="time the search oracle")
    p.add_argument("N", type=_positive)
    p.add_argument("--repeat", type=_positive, default=1)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--max-n", type=_positive, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ScriptSyntaxError, FeasibilityError, BoardError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ReplayError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
