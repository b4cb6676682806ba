"""Explicit optimal solutions with ``N**2 + 2N`` moves."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .board import Board, BoardError, Color, parse_board
from .notation import MoveScript, replay


class SolutionForm(str, enum.Enum):
    DIRECT = "direct"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class MoveCounts:
    total: int
    jumps: int
    steps: int
    half: int  # N = 2*half (even) or N = 2*half - 1 (odd)


def _check(N: int) -> None:
    if not isinstance(N, int) or N < 1:
        raise BoardError(f"N must be a positive integer, got {N!r}")


def _run(token: str, power: int) -> list[str]:
    return [token] * power


def _opening_term(k: int) -> list[str]:
    """``S j^(2k-1) s J^(2k)``"""
    return ["S", *_run("j", 2 * k - 1), "s", *_run("J", 2 * k)]


def _closing_term(k: int) -> list[str]:
    """``J^(2k) s j^(2k-1) S``"""
    return [*_run("J", 2 * k), "s", *_run("j", 2 * k - 1), "S"]


def _direct(N: int) -> list[str]:
    out: list[str] = []
    if N % 2 == 0:
        n = N // 2
        for k in range(1, n + 1):
            out += _opening_term(k)
        for k in range(1, n + 1):
            out += ["s", *_run("j", 2 * n - 2 * k + 1), "S", *_run("J", 2 * n - 2 * k)]
    else:
        n = (N + 1) // 2
        for k in range(1, n):
            out += _opening_term(k)
        out += ["S", *_run("j", 2 * n - 1), "S"]
        for k in range(1, n):
            out += [*_run("J", 2 * n - 2 * k), "s", *_run("j", 2 * n - 2 * k - 1), "S"]
    return out


def _symmetric(N: int) -> list[str]:
    out: list[str] = []
    if N % 2 == 0:
        n = N // 2
        for k in range(1, n):
            out += _opening_term(k)
        out += ["S", *_run("j", 2 * n - 1), "s", *_run("J", 2 * n), "s", *_run("j", 2 * n - 1), "S"]
    else:
        n = (N + 1) // 2
        for k in range(1, n):
            out += _opening_term(k)
        out += ["S", *_run("j", 2 * n - 1), "S"]
    for k in range(n - 1, 0, -1):
        out += _closing_term(k)
    return out


def solution_sequence(N: int, form: SolutionForm | str = SolutionForm.DIRECT) -> MoveScript:
    """The closed-form solution for ``N`` pegs of each color.

    >>> str(solution_sequence(3))
    'SjsJJSjjjSJJsjS'
    """
    _check(N)
    form = SolutionForm(form)
    tokens = _direct(N) if form is SolutionForm.DIRECT else _symmetric(N)
    return MoveScript(tuple(tokens))


def expected_counts(N: int) -> MoveCounts:
    _check(N)
    return MoveCounts(total=N * N + 2 * N, jumps=N * N, steps=2 * N, half=(N + 1) // 2)


def intermediate_pattern(N: int, m: int) -> Board:
    """``B^(N-2m) O (RB)^(2m) R^(N-2m)``"""
    _check(N)
    if m < 0 or 2 * m > N:
        raise BoardError(f"need 0 <= 2m <= N, got N={N}, m={m}")
    return parse_board("B" * (N - 2 * m) + "O" + "RB" * (2 * m) + "R" * (N - 2 * m), N)


def mirror(board: Board) -> Board:
    """Left-right reversal of a board (colors unchanged)."""
    return parse_board(board.cells[::-1], board.n)


@dataclass(frozen=True)
class PatternCheck:
    N: int
    m: int
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def _opening_boundaries(N: int) -> Iterator[tuple[int, int]]:
    """(m, number of tokens) after each of the first m opening terms."""
    last = N // 2 if N % 2 == 0 else (N + 1) // 2 - 1
    length = 0
    yield 0, 0
    for k in range(1, last + 1):
        length += len(_opening_term(k))
        yield k, length


def check_intermediate_patterns(N: int) -> list[PatternCheck]:
    """Compare replayed prefixes of the direct solution against the pattern.

    Rows are one per opening term boundary ``m``.  For odd ``N`` a final row
    with ``m = -1`` checks the board after the middle segment ``S j^(N) S``
    against ``R (BR)^(N-1) O B``.  For even ``N`` the pattern is tested as is
    and mismatches are reported, not raised.
    """
    trace = replay(N, solution_sequence(N), track_ids=False)
    rows = []
    for m, length in _opening_boundaries(N):
        rows.append(PatternCheck(N, m, intermediate_pattern(N, m).cells, trace.boards[length].cells))
    if N % 2 == 1:
        n = (N + 1) // 2
        _, length = list(_opening_boundaries(N))[-1]
        after_middle = length + 2 * n + 1
        expected = "R" + "BR" * (2 * n - 2) + "OB"
        rows.append(PatternCheck(N, -1, expected, trace.boards[after_middle].cells))
    return rows
