"""Solve, search and audit the one-row red/blue peg swap puzzle."""

from .audit import AuditReport, audit_solution, build_groups, check_alternation, peg_event_log, track_crossings
from .board import (
    Board,
    BoardError,
    Color,
    IllegalMoveError,
    Move,
    MoveKind,
    PegId,
    apply_move,
    goal_board,
    initial_board,
    legal_moves,
    move_weight_delta,
    parse_board,
    render_board,
    weight,
)
from .closed_form import (
    MoveCounts,
    SolutionForm,
    check_intermediate_patterns,
    expected_counts,
    intermediate_pattern,
    solution_sequence,
)
from .notation import (
    MoveScript,
    ReplayError,
    ScriptSyntaxError,
    SolutionTrace,
    TokenError,
    classify,
    format_script,
    parse_script,
    replay,
    resolve_token,
    trace_moves,
)
from .oracle import (
    FeasibilityError,
    SearchResult,
    bfs_min_moves,
    decode_state,
    encode_state,
    enumerate_reachable,
    max_increasing_jump_run,
)

__version__ = "0.1.0"
