"""Exit criteria.  Each test appends one PASS/FAIL line to the terminal summary."""

import random
import time

from pegswap.audit import audit_solution, check_alternation, peg_event_log
from pegswap.board import all_boards, apply_move, initial_board, legal_moves, parse_board, render_board, weight
from pegswap.closed_form import SolutionForm, check_intermediate_patterns, expected_counts, solution_sequence
from pegswap.notation import MoveScript, TOKENS, format_script, parse_script, replay, trace_moves
from pegswap.oracle import bfs_min_moves, decode_state, encode_state, max_increasing_jump_run, random_solution

GOLDEN = [
    "SjS",
    "SjsJJsjS",
    "SjsJJSjjjSJJsjS",
    "SjsJJSjjjsJJJJsjjjSJJsjS",
    "SjsJJSjjjsJJJJSjjjjjSJJJJsjjjSJJsjS",
]


def record(log, label, ok, detail=""):
    log.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" ({detail})" if detail else ""))
    assert ok, f"{label}: {detail}"


def test_c1_golden_strings(acceptance_log):
    got = [format_script(solution_sequence(N, SolutionForm.DIRECT)) for N in range(1, 6)]
    record(acceptance_log, "1 golden strings N=1..5", got == GOLDEN)


def test_c2_solver_sweep(acceptance_log):
    t0 = time.perf_counter()
    bad = []
    for N in range(1, 201):
        direct = solution_sequence(N, SolutionForm.DIRECT)
        symmetric = solution_sequence(N, SolutionForm.SYMMETRIC)
        want = expected_counts(N)
        if direct.tokens != symmetric.tokens:
            bad.append((N, "forms differ"))
        for form, script in (("direct", direct), ("symmetric", symmetric)):
            t = replay(N, script, track_ids=False)
            c = t.counts
            ok = (
                t.solved
                and c["total"] == want.total == N * N + 2 * N
                and c["jumps"] == want.jumps == N * N
                and c["steps"] == want.steps == 2 * N
                and t.weight_trace[-1] == 2 * N * (N + 1)
                and weight(t.final_board) == 2 * N * (N + 1)
            )
            if not ok:
                bad.append((N, form))
    record(acceptance_log, "2 solver sweep N=1..200", not bad,
           f"{time.perf_counter() - t0:.1f}s" + (f", failures {bad[:5]}" if bad else ""))


def test_c3_optimality(acceptance_log):
    def run(ns):
        t0 = time.perf_counter()
        results = {N: bfs_min_moves(N) for N in ns}
        return results, time.perf_counter() - t0

    small, t_small = run(range(1, 9))
    large, t_large = run(range(9, 11))
    values = {**small, **large}
    exact = all(r.min_moves == N * N + 2 * N for N, r in values.items())
    deterministic = True
    for N in range(1, 11):
        for workers in (1, 2, 4):
            r = bfs_min_moves(N, workers=workers)
            if (r.min_moves, r.reachable_states) != (values[N].min_moves, values[N].reachable_states):
                deterministic = False
    ok = exact and deterministic and t_small < 10 and t_large < 120
    record(acceptance_log, "3 BFS optimality N=1..10", ok,
           f"N<=8 {t_small:.1f}s, N=9..10 {t_large:.1f}s, deterministic={deterministic}")


def test_c4a_audit_closed_forms(acceptance_log):
    failures = []
    for N in range(1, 51):
        report = audit_solution(N, solution_sequence(N))
        if not report.passed or report.first_cross_count != N * N:
            failures.append((N, report.failures))
    record(acceptance_log, "4a audit closed forms N=1..50", not failures, str(failures[:3]))


def test_c4b_audit_oracle_witnesses(acceptance_log):
    failures = []
    for N in range(1, 7):
        report = audit_solution(N, bfs_min_moves(N, want_path=True).path)
        if not report.passed or report.first_cross_count != N * N:
            failures.append((N, report.failures))
    record(acceptance_log, "4b audit BFS witnesses N=1..6", not failures, str(failures[:3]))


def test_c4c_audit_random_walks(acceptance_log):
    t0 = time.perf_counter()
    summary = []
    clean = True
    for N in (2, 3, 4):
        rng = random.Random(2024 + N)
        conflicts = partition = other = merged_over = 0
        for _ in range(1000):
            report = audit_solution(N, random_solution(N, rng))
            g = report.grouping
            conflicts += bool(g.conflicts or g.missing or g.unexpected)
            partition += not g.partition_ok
            merged_over += report.checks["merged_block_average"] is False
            other += any(f != "pairing" for f in report.failures)
        summary.append(f"N={N}: {conflicts} pairing conflicts, {partition} partition failures, "
                       f"{other} other failures, {merged_over} merged-block overruns")
        clean = clean and not (conflicts or partition or other)
    elapsed = time.perf_counter() - t0
    record(acceptance_log, "4c audit 1000 random solved walks N=2..4", clean and elapsed < 120,
           "; ".join(summary) + f"; {elapsed:.1f}s")


def test_c5_consecutive_jump_bound(acceptance_log):
    runs = {N: max_increasing_jump_run(N) for N in range(1, 5)}
    record(acceptance_log, "5 increasing-jump runs <= N for N=1..4",
           all(v <= N for N, v in runs.items()), str(runs))


def test_c6_intermediate_patterns(acceptance_log):
    odd_bad, even_bad = [], []
    for N in range(1, 51):
        rows = check_intermediate_patterns(N)
        bad = [(r.m, r.expected, r.actual) for r in rows if not r.ok]
        if N % 2:
            n = (N + 1) // 2
            assert {r.m for r in rows} == set(range(n)) | {-1}
            odd_bad += bad
        else:
            even_bad += bad
    record(acceptance_log, "6 intermediate patterns (odd N<=49, even N<=50 reported)",
           not odd_bad, f"odd mismatches {len(odd_bad)}, even mismatches {len(even_bad)}")


def test_c7_property_suites(acceptance_log):
    problems = []
    for n in (1, 2, 3):
        for b in all_boards(n):
            if parse_board(render_board(b), n) != b or decode_state(encode_state(b), n) != b:
                problems.append(("roundtrip", b.cells))
            for m in legal_moves(b):
                nb = apply_move(b, m)
                if nb.cells.count("O") != 1 or nb.cells.count("R") != n:
                    problems.append(("invariant", b.cells))
                if apply_move(nb, m.reversed()) != b:
                    problems.append(("reverse", b.cells))
                d = weight(nb) - weight(b)
                if d != m.weight_delta or abs(d) != (1 if m.kind.value == "step" else 2):
                    problems.append(("delta", b.cells))
    rng = random.Random(7)
    for _ in range(500):
        ms = MoveScript(tuple(rng.choice(TOKENS) for _ in range(rng.randint(0, 30))))
        if parse_script(format_script(ms)) != ms or parse_script(format_script(ms, compact=True)) != ms:
            problems.append(("script", str(ms)))
    for _ in range(500):
        n = rng.randint(1, 4)
        b = initial_board(n)
        moves = []
        for _ in range(rng.randint(0, 80)):
            m = rng.choice(legal_moves(b))
            moves.append(m)
            b = apply_move(b, m)
        t = trace_moves(n, moves)
        if not check_alternation(peg_event_log(t), t).passed:
            problems.append(("alternation", n))
    record(acceptance_log, "7 property suites", not problems, str(problems[:3]))
