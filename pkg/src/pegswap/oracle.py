"""Exhaustive breadth-first search over the puzzle's state graph.

States are packed into integers: the empty-hole index sits above a
``2n + 1``-bit mask of red holes.  The visited set is a flat boolean array
indexed by a perfect rank (empty index times the colex rank of the red
subset among the remaining ``2n`` holes), so frontier expansion, ranking and
deduplication all run as numpy array operations, one BFS level at a time.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, Optional

import numpy as np

from .board import (
    Board,
    BoardError,
    Color,
    Move,
    MoveKind,
    apply_move,
    goal_board,
    initial_board,
    legal_moves,
)

DEFAULT_MAX_N = 12
DEFAULT_SCAN_MAX_N = 5
DEFAULT_MEMORY_BUDGET = 2 * 1024**3


class FeasibilityError(ValueError):
    """The requested size exceeds a configured bound."""


def state_count(n: int) -> int:
    """Number of valid boards: ``(2n+1) * C(2n, n)``."""
    return (2 * n + 1) * comb(2 * n, n)


def memory_estimate(n: int, want_path: bool = False) -> int:
    """Rough peak bytes for :func:`bfs_min_moves`.

    One byte per state for the visited array, plus eight per state for
    predecessors when a witness is requested, plus frontier headroom.

    ======  ===========  ==================
    n       states       visited / +path
    ======  ===========  ==================
    8       218,790      0.2 MB / 2 MB
    10      3,879,876    4 MB / 35 MB
    12      67,603,900   68 MB / 610 MB
    ======  ===========  ==================
    """
    total = state_count(n)
    per_state = 1 + (8 if want_path else 0)
    return total * per_state + total * 8 * 2


# -- packing -----------------------------------------------------------------


def _width(n: int) -> int:
    return 2 * n + 1


def encode_state(board: Board) -> int:
    e = board.empty_index
    mask = 0
    for i, c in enumerate(board.cells):
        if c == "R":
            mask |= 1 << i
    return (e << _width(board.n)) | mask


def decode_state(packed: int, n: int) -> Board:
    w = _width(n)
    e = int(packed) >> w
    mask = int(packed) & ((1 << w) - 1)
    if not 0 <= e < w:
        raise BoardError(f"empty index {e} out of range for n={n}")
    if mask >> e & 1:
        raise BoardError("red mask marks the empty hole")
    if bin(mask).count("1") != n:
        raise BoardError(f"red mask has {bin(mask).count('1')} bits, expected {n}")
    cells = ["R" if mask >> i & 1 else "B" for i in range(w)]
    cells[e] = "O"
    return Board(n, "".join(cells))


@lru_cache(maxsize=None)
def _binomials(n: int) -> np.ndarray:
    size = 2 * n + 1
    table = np.zeros((size, n + 2), dtype=np.int64)
    for p in range(size):
        for k in range(n + 2):
            table[p, k] = comb(p, k)
    return table


def rank_states(packed: np.ndarray, n: int) -> np.ndarray:
    """Perfect rank in ``[0, state_count(n))`` for an array of packed states."""
    w = _width(n)
    packed = np.asarray(packed, dtype=np.int64)
    e = packed >> w
    mask = packed & ((1 << w) - 1)
    low = mask & ((np.int64(1) << e) - 1)
    compressed = low | ((mask >> (e + 1)) << e)
    table = _binomials(n)
    rank = np.zeros_like(packed)
    seen = np.zeros_like(packed)
    for p in range(2 * n):
        bit = (compressed >> p) & 1
        seen += bit
        rank += bit * table[p, np.minimum(seen, n + 1)]
    return e * comb(2 * n, n) + rank


def _neighbors(states: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """All successors of ``states``; returns (successors, index of parent)."""
    w = _width(n)
    e = states >> w
    mask = states & ((1 << w) - 1)
    outs, parents = [], []
    idx = np.arange(len(states), dtype=np.int64)
    for d in (-2, -1, 1, 2):
        src = e + d
        ok = (src >= 0) & (src < w)
        if not ok.any():
            continue
        s, m, ee, i = src[ok], mask[ok], e[ok], idx[ok]
        red = (m >> s) & 1
        new_mask = m ^ (red << s) ^ (red << ee)
        outs.append((s << w) | new_mask)
        parents.append(i)
    if not outs:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    return np.concatenate(outs), np.concatenate(parents)


def _expand(frontier: np.ndarray, n: int, workers: int) -> tuple[np.ndarray, np.ndarray]:
    if workers <= 1 or len(frontier) < 4096:
        return _neighbors(frontier, n)
    chunks = np.array_split(frontier, workers)
    offsets = np.cumsum([0] + [len(c) for c in chunks[:-1]])
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda c: _neighbors(c, n), chunks))
    # concatenation in chunk order keeps the result independent of scheduling
    succ = np.concatenate([p[0] for p in parts])
    par = np.concatenate([p[1] + off for p, off in zip(parts, offsets)])
    return succ, par


# -- search ------------------------------------------------------------------


@dataclass
class SearchResult:
    n: int
    min_moves: Optional[int]  # None when the goal is unreachable
    reachable_states: Optional[int]
    path: Optional[list[Move]] = None
    peak_frontier: int = 0
    states_expanded: int = 0
    levels: int = 0
    elapsed: float = field(default=0.0, compare=False)


def _check_bound(n: int, max_n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise BoardError(f"n must be a positive integer, got {n!r}")
    if n > max_n:
        raise FeasibilityError(
            f"n={n} exceeds the feasibility bound {max_n} "
            f"({state_count(n):,} states); raise max_n to override"
        )


def _move_between(a: Board, b: Board) -> Move:
    to = a.empty_index
    src = b.empty_index
    kind = MoveKind.STEP if abs(to - src) == 1 else MoveKind.JUMP
    return Move(kind, src, to, Color(a.cells[src]))


def bfs_min_moves(
    n: int,
    want_path: bool = False,
    *,
    max_n: int = DEFAULT_MAX_N,
    workers: int = 1,
    bidirectional: bool = False,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
) -> SearchResult:
    """Exact shortest solution length, found by exhaustive BFS.

    The forward search runs to exhaustion so that the reachable-state count
    is exact.  ``bidirectional=True`` stops as soon as the two frontiers
    meet; it reports the same ``min_moves`` but no reachable count or path.
    """
    _check_bound(n, max_n)
    need = memory_estimate(n, want_path)
    if need > memory_budget:
        raise FeasibilityError(
            f"n={n} needs about {need / 2**20:.0f} MiB, budget is {memory_budget / 2**20:.0f} MiB"
        )
    if bidirectional:
        if want_path:
            raise ValueError("witness paths are only produced by the forward search")
        return _bidirectional(n, workers)

    t0 = time.perf_counter()
    start = encode_state(initial_board(n))
    goal = encode_state(goal_board(n))
    visited = np.zeros(state_count(n), dtype=bool)
    parent = np.full(state_count(n), -1, dtype=np.int64) if want_path else None

    frontier = np.array([start], dtype=np.int64)
    visited[rank_states(frontier, n)] = True
    depth, found, reached = 0, None, 1
    peak, expanded = 1, 0
    if start == goal:
        found = 0
    while len(frontier):
        succ, par = _expand(frontier, n, workers)
        expanded += len(frontier)
        ranks = rank_states(succ, n)
        fresh = ~visited[ranks]
        succ, ranks, par = succ[fresh], ranks[fresh], par[fresh]
        # keep the first occurrence of each state, in expansion order
        ranks, first = np.unique(ranks, return_index=True)
        succ, par = succ[first], par[first]
        visited[ranks] = True
        if parent is not None:
            parent[ranks] = frontier[par]
        depth += 1
        frontier = np.sort(succ)
        reached += len(frontier)
        peak = max(peak, len(frontier))
        if found is None and len(frontier) and np.any(frontier == goal):
            found = depth

    path = None
    if want_path and found is not None:
        chain = [goal]
        while chain[-1] != start:
            chain.append(int(parent[rank_states(np.array([chain[-1]]), n)[0]]))
        boards = [decode_state(p, n) for p in reversed(chain)]
        path = [_move_between(a, b) for a, b in zip(boards, boards[1:])]

    return SearchResult(
        n=n,
        min_moves=found,
        reachable_states=reached,
        path=path,
        peak_frontier=peak,
        states_expanded=expanded,
        levels=depth - 1,
        elapsed=time.perf_counter() - t0,
    )


def _bidirectional(n: int, workers: int) -> SearchResult:
    t0 = time.perf_counter()
    sides = []
    for board in (initial_board(n), goal_board(n)):
        seen = np.zeros(state_count(n), dtype=bool)
        front = np.array([encode_state(board)], dtype=np.int64)
        seen[rank_states(front, n)] = True
        sides.append([seen, front, 0])
    if sides[0][1][0] == sides[1][1][0]:
        return SearchResult(n, 0, None, peak_frontier=1, elapsed=time.perf_counter() - t0)
    peak, expanded = 1, 0
    while len(sides[0][1]) and len(sides[1][1]):
        # grow the smaller frontier; ties go to the forward side
        i = 0 if len(sides[0][1]) <= len(sides[1][1]) else 1
        seen, front, depth = sides[i]
        other = sides[1 - i][0]
        succ, _ = _expand(front, n, workers)
        expanded += len(front)
        ranks, first = np.unique(rank_states(succ, n), return_index=True)
        fresh = ~seen[ranks]
        ranks = ranks[fresh]
        seen[ranks] = True
        front = np.sort(succ[first[fresh]])
        sides[i] = [seen, front, depth + 1]
        peak = max(peak, len(front))
        if other[ranks].any():
            total = sides[0][2] + sides[1][2]
            return SearchResult(
                n, total, None, peak_frontier=peak, states_expanded=expanded,
                elapsed=time.perf_counter() - t0,
            )
    return SearchResult(n, None, None, peak_frontier=peak, states_expanded=expanded,
                        elapsed=time.perf_counter() - t0)


def bfs_distances(n: int, *, max_n: int = DEFAULT_MAX_N) -> dict[str, int]:
    """BFS distance from the initial position to every reachable board."""
    _check_bound(n, max_n)
    dist = {}
    frontier = np.array([encode_state(initial_board(n))], dtype=np.int64)
    visited = np.zeros(state_count(n), dtype=bool)
    visited[rank_states(frontier, n)] = True
    depth = 0
    while len(frontier):
        for p in frontier.tolist():
            dist[decode_state(p, n).cells] = depth
        succ, _ = _neighbors(frontier, n)
        succ = np.unique(succ)
        ranks = rank_states(succ, n)
        frontier = succ[~visited[ranks]]
        visited[rank_states(frontier, n)] = True
        depth += 1
    return dist


class ReachableSet:
    """All states reachable from the initial position, in BFS order."""

    def __init__(self, n: int, packed: np.ndarray):
        self.n = n
        self.packed = packed

    @property
    def count(self) -> int:
        return len(self.packed)

    def __len__(self) -> int:
        return self.count

    def __iter__(self) -> Iterator[Board]:
        for p in self.packed.tolist():
            yield decode_state(p, self.n)


def enumerate_reachable(n: int, *, max_n: int = DEFAULT_MAX_N) -> ReachableSet:
    _check_bound(n, max_n)
    frontier = np.array([encode_state(initial_board(n))], dtype=np.int64)
    visited = np.zeros(state_count(n), dtype=bool)
    visited[rank_states(frontier, n)] = True
    levels = [frontier]
    while len(frontier):
        succ, _ = _neighbors(frontier, n)
        succ = np.unique(succ)
        frontier = succ[~visited[rank_states(succ, n)]]
        visited[rank_states(frontier, n)] = True
        if len(frontier):
            levels.append(frontier)
    return ReachableSet(n, np.concatenate(levels))


def _increasing_jumps(board: Board) -> list[Move]:
    return [m for m in legal_moves(board) if m.kind is MoveKind.JUMP and m.weight_delta > 0]


def max_increasing_jump_run(n: int, *, max_n: int = DEFAULT_SCAN_MAX_N) -> int:
    """Longest chain of consecutive weight-increasing jumps from any reachable state.

    Weight strictly increases along such a chain, so the jump graph is acyclic
    and the longest chain is a memoised depth-first maximum.
    """
    _check_bound(n, max_n)
    longest: dict[str, int] = {}

    def run(board: Board) -> int:
        key = board.cells
        if key not in longest:
            longest[key] = max(
                (1 + run(apply_move(board, m)) for m in _increasing_jumps(board)),
                default=0,
            )
        return longest[key]

    return max(run(b) for b in enumerate_reachable(n, max_n=max_n))


def random_solution(
    n: int,
    rng: random.Random,
    *,
    forward_bias: float = 0.7,
    max_length: int = 2000,
    max_tries: int = 1000,
) -> list[Move]:
    """A random legal walk from the initial position that ends at the goal.

    At each turn a weight-increasing move is chosen with probability
    ``forward_bias`` (when one exists), otherwise any legal move uniformly.
    Walks longer than ``max_length`` are discarded and restarted.
    """
    goal = goal_board(n).cells
    for _ in range(max_tries):
        board = Board(n, initial_board(n).cells)
        moves: list[Move] = []
        while board.cells != goal and len(moves) < max_length:
            options = legal_moves(board)
            forward = [m for m in options if m.weight_delta > 0]
            pool = forward if forward and rng.random() < forward_bias else options
            m = rng.choice(pool)
            moves.append(m)
            board = apply_move(board, m)
        if board.cells == goal:
            return moves
    raise RuntimeError(f"no random solution for n={n} within {max_tries} tries")


def geodesic_report(n: int, moves: list[Move], *, max_n: int = DEFAULT_MAX_N) -> list[tuple[int, int]]:
    """Positions along ``moves`` whose BFS distance differs from the prefix length.

    Returns ``(prefix_length, bfs_distance)`` for every mismatch; an empty list
    means every prefix is itself a shortest path to its endpoint.
    """
    dist = bfs_distances(n, max_n=max_n)
    board = Board(n, initial_board(n).cells)
    bad = []
    for k, m in enumerate(moves, start=1):
        board = apply_move(board, m)
        if dist[board.cells] != k:
            bad.append((k, dist[board.cells]))
    return bad


__all__ = [
    "FeasibilityError",
    "ReachableSet",
    "SearchResult",
    "bfs_distances",
    "bfs_min_moves",
    "decode_state",
    "encode_state",
    "enumerate_reachable",
    "geodesic_report",
    "max_increasing_jump_run",
    "memory_estimate",
    "random_solution",
    "rank_states",
    "state_count",
]
