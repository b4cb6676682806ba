"""Puzzle state, legal moves and the weight function.

A board is a row of ``2n + 1`` holes holding ``n`` blue pegs, ``n`` red pegs
and exactly one empty hole.  Holes are numbered from 0 at the left.  The
canonical text form uses one character per hole: ``B`` (blue), ``R`` (red)
and ``O`` (empty), e.g. ``"BBORR"``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence, Union

EMPTY = "O"


class BoardError(ValueError):
    """Raised for malformed boards."""


class IllegalMoveError(ValueError):
    """Raised when a move does not apply to a board."""


class Color(str, enum.Enum):
    BLUE = "B"
    RED = "R"

    @property
    def other(self) -> "Color":
        return Color.RED if self is Color.BLUE else Color.BLUE

    @property
    def forward(self) -> int:
        """Direction (+1 right, -1 left) in which this color gains weight."""
        return 1 if self is Color.BLUE else -1


class MoveKind(str, enum.Enum):
    STEP = "step"
    JUMP = "jump"


class PegId(NamedTuple):
    color: Color
    ordinal: int

    def __str__(self) -> str:
        return f"{self.color.value}{self.ordinal}"


@dataclass(frozen=True)
class Board:
    """An immutable puzzle position.

    ``peg_ids`` optionally labels each occupied hole with a stable peg
    identity; it is carried through :func:`apply_move` but ignored by
    equality and hashing, which look at colors only.
    """

    n: int
    cells: str
    peg_ids: Optional[tuple[Optional[PegId], ...]] = field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise BoardError(f"n must be a positive integer, got {self.n!r}")
        size = 2 * self.n + 1
        if len(self.cells) != size:
            raise BoardError(
                f"board {self.cells!r} has length {len(self.cells)}, expected {size}"
            )
        bad = set(self.cells) - {"B", "R", EMPTY}
        if bad:
            raise BoardError(f"unknown symbol(s) {sorted(bad)} in {self.cells!r}")
        if (
            self.cells.count(EMPTY) != 1
            or self.cells.count("B") != self.n
            or self.cells.count("R") != self.n
        ):
            raise BoardError(
                f"board {self.cells!r} must hold one O, {self.n} B and {self.n} R"
            )
        if self.peg_ids is not None:
            self._check_ids()

    def _check_ids(self) -> None:
        ids = self.peg_ids
        if len(ids) != len(self.cells):
            raise BoardError("peg_ids length differs from board length")
        seen = set()
        for cell, pid in zip(self.cells, ids):
            if cell == EMPTY:
                if pid is not None:
                    raise BoardError("empty hole carries a peg id")
                continue
            if pid is None or pid.color.value != cell:
                raise BoardError(f"peg id {pid} does not match cell {cell!r}")
            if not 1 <= pid.ordinal <= self.n or pid in seen:
                raise BoardError(f"peg id {pid} out of range or duplicated")
            seen.add(pid)

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def empty_index(self) -> int:
        return self.cells.index(EMPTY)

    def color_at(self, index: int) -> Optional[Color]:
        c = self.cells[index]
        return None if c == EMPTY else Color(c)

    def position_of(self, peg: PegId) -> int:
        if self.peg_ids is None:
            raise BoardError("board does not track peg identities")
        return self.peg_ids.index(peg)

    @classmethod
    def _unchecked(cls, n: int, cells: str, peg_ids=None) -> "Board":
        # hot path for apply_move: the result of a legal move is valid by construction
        b = object.__new__(cls)
        object.__setattr__(b, "n", n)
        object.__setattr__(b, "cells", cells)
        object.__setattr__(b, "peg_ids", peg_ids)
        return b

    def __str__(self) -> str:
        return self.cells


BoardLike = Union[Board, str]


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    from_index: int
    to_index: int
    mover: Color

    def __post_init__(self) -> None:
        dist = abs(self.to_index - self.from_index)
        if dist != (1 if self.kind is MoveKind.STEP else 2):
            raise IllegalMoveError(
                f"{self.kind.value} cannot span {dist} holes ({self.from_index}->{self.to_index})"
            )

    @property
    def direction(self) -> int:
        return 1 if self.to_index > self.from_index else -1

    @property
    def jumped_index(self) -> Optional[int]:
        if self.kind is MoveKind.STEP:
            return None
        return (self.from_index + self.to_index) // 2

    @property
    def weight_delta(self) -> int:
        """Signed weight change; the sign depends only on color and direction."""
        return (self.to_index - self.from_index) * self.mover.forward

    def reversed(self) -> "Move":
        return Move(self.kind, self.to_index, self.from_index, self.mover)

    def __str__(self) -> str:
        return f"{self.mover.value} {self.kind.value} {self.from_index}->{self.to_index}"


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise BoardError(f"n must be a positive integer, got {n!r}")


def _default_ids(cells: str) -> tuple[Optional[PegId], ...]:
    counters = {"B": 0, "R": 0}
    ids: list[Optional[PegId]] = []
    for c in cells:
        if c == EMPTY:
            ids.append(None)
        else:
            counters[c] += 1
            ids.append(PegId(Color(c), counters[c]))
    return tuple(ids)


def initial_board(n: int) -> Board:
    """``B^n O R^n`` with pegs numbered left to right within each color."""
    _check_n(n)
    cells = "B" * n + EMPTY + "R" * n
    return Board(n, cells, _default_ids(cells))


def goal_board(n: int) -> Board:
    _check_n(n)
    cells = "R" * n + EMPTY + "B" * n
    return Board(n, cells)


def parse_board(text: str, n: Optional[int] = None, *, with_ids: bool = False) -> Board:
    """Parse the canonical ``B/R/O`` form.

    If ``n`` is omitted it is inferred from the length.  ``with_ids`` attaches
    left-to-right peg identities.
    """
    text = text.strip()
    if n is None:
        if len(text) % 2 != 1 or len(text) < 3:
            raise BoardError(f"cannot infer n from board of length {len(text)}")
        n = (len(text) - 1) // 2
    return Board(n, text, _default_ids(text) if with_ids else None)


def render_board(board: Board) -> str:
    return board.cells


def as_board(board: BoardLike) -> Board:
    return parse_board(board) if isinstance(board, str) else board


def legal_moves(board: BoardLike) -> list[Move]:
    """Every move into the empty hole, ordered by source hole."""
    b = as_board(board)
    e = b.empty_index
    moves = []
    for src in (e - 2, e - 1, e + 1, e + 2):
        if 0 <= src < b.size:
            kind = MoveKind.STEP if abs(src - e) == 1 else MoveKind.JUMP
            moves.append(Move(kind, src, e, Color(b.cells[src])))
    return moves


def check_move(board: Board, move: Move) -> None:
    """Raise :class:`IllegalMoveError` unless ``move`` is legal on ``board``."""
    size = board.size
    if not (0 <= move.from_index < size and 0 <= move.to_index < size):
        raise IllegalMoveError(f"{move} leaves the board")
    if board.cells[move.to_index] != EMPTY:
        raise IllegalMoveError(f"{move}: destination hole {move.to_index} is occupied")
    src = board.cells[move.from_index]
    if src == EMPTY:
        raise IllegalMoveError(f"{move}: source hole {move.from_index} is empty")
    if src != move.mover.value:
        raise IllegalMoveError(f"{move}: source hole holds {src}")
    mid = move.jumped_index
    if mid is not None and board.cells[mid] == EMPTY:
        raise IllegalMoveError(f"{move}: nothing to jump over at {mid}")


def apply_move(board: BoardLike, move: Move) -> Board:
    b = as_board(board)
    check_move(b, move)
    lo, hi = sorted((move.from_index, move.to_index))
    mover = b.cells[move.from_index]
    if move.from_index < move.to_index:
        middle = b.cells[lo + 1 : hi] + mover
        cells = b.cells[:lo] + EMPTY + middle + b.cells[hi + 1 :]
    else:
        middle = b.cells[lo + 1 : hi]
        cells = b.cells[:lo] + mover + middle + EMPTY + b.cells[hi + 1 :]
    ids = None
    if b.peg_ids is not None:
        lst = list(b.peg_ids)
        lst[move.to_index] = lst[move.from_index]
        lst[move.from_index] = None
        ids = tuple(lst)
    return Board._unchecked(b.n, cells, ids)


def _base_sums(n: int) -> tuple[int, int]:
    blue = n * (n - 1) // 2
    red = sum(range(n + 1, 2 * n + 1))
    return blue, red


def weight(board: BoardLike) -> int:
    """Rightward displacement of blue plus leftward displacement of red."""
    b = as_board(board)
    blue0, red0 = _base_sums(b.n)
    blue = sum(i for i, c in enumerate(b.cells) if c == "B")
    red = sum(i for i, c in enumerate(b.cells) if c == "R")
    return (blue - blue0) + (red0 - red)


def weight_by_identity(board: Board) -> int:
    """Same quantity as :func:`weight`, summed peg by peg from tracked ids."""
    if board.peg_ids is None:
        raise BoardError("board does not track peg identities")
    n = board.n
    total = 0
    for pos, pid in enumerate(board.peg_ids):
        if pid is None:
            continue
        if pid.color is Color.BLUE:
            total += pos - (pid.ordinal - 1)
        else:
            total += (n + pid.ordinal) - pos
    return total


def move_weight_delta(board: BoardLike, move: Move) -> int:
    b = as_board(board)
    check_move(b, move)
    return move.weight_delta


def all_boards(n: int):
    """Yield every valid board for ``n`` (not only reachable ones)."""
    from itertools import combinations

    _check_n(n)
    size = 2 * n + 1
    for e in range(size):
        rest = [i for i in range(size) if i != e]
        for reds in combinations(rest, n):
            cells = ["B"] * size
            cells[e] = EMPTY
            for r in reds:
                cells[r] = "R"
            yield Board(n, "".join(cells))


def play_moves(start: Board, moves: Sequence[Move]) -> Board:
    """Apply ``moves`` in order."""
    b = start
    for m in moves:
        b = apply_move(b, m)
    return b
