"""The four-letter move notation and script replay.

``S`` blue step right, ``s`` red step left, ``J`` blue jump right and ``j``
red jump left.  These are exactly the weight-increasing moves.  Scripts may
use a compact form in which a token followed by a decimal count is repeated,
so ``"Sj3s"`` means ``"Sjjjs"``.  Whitespace is ignored everywhere.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

from .board import (
    Board,
    Color,
    IllegalMoveError,
    Move,
    MoveKind,
    apply_move,
    as_board,
    goal_board,
    initial_board,
    weight,
)

TOKENS = "SsJj"

# token -> (mover, kind, offset of the source hole from the empty hole)
_TOKEN_RULES = {
    "S": (Color.BLUE, MoveKind.STEP, -1),
    "s": (Color.RED, MoveKind.STEP, +1),
    "J": (Color.BLUE, MoveKind.JUMP, -2),
    "j": (Color.RED, MoveKind.JUMP, +2),
}


class ScriptSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class TokenError(IllegalMoveError):
    """A token has no matching move on the given board."""


class ReplayError(ValueError):
    def __init__(self, position: int, token: str, board: Board, reason: str = ""):
        msg = f"token {position} ({token!r}) inapplicable on {board.cells}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)
        self.position = position
        self.token = token
        self.board = board


@dataclass(frozen=True)
class MoveScript:
    tokens: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "tokens", tuple(self.tokens))
        for i, t in enumerate(self.tokens):
            if t not in _TOKEN_RULES:
                raise ScriptSyntaxError(f"unknown token {t!r}", i + 1)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[str]:
        return iter(self.tokens)

    def __add__(self, other: "MoveScript") -> "MoveScript":
        return MoveScript(self.tokens + tuple(other))

    def __str__(self) -> str:
        return format_script(self)

    def tally(self) -> Counter:
        return Counter(self.tokens)


ScriptLike = Union[MoveScript, str, Sequence[str]]


def parse_script(text: str) -> MoveScript:
    """Parse plain or compact notation.

    Whitespace is skipped even inside a count, so ``"j1 2"`` is twelve
    ``j``.  Positions in error messages are 1-based offsets into ``text``.

    >>> str(parse_script("Sj3sJ2"))
    'SjjjsJJ'
    """
    tokens: list[str] = []
    i = 0
    last_token_at: Optional[int] = None
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _TOKEN_RULES:
            tokens.append(ch)
            last_token_at = len(tokens) - 1
            i += 1
        elif ch.isdigit():
            start = i
            digits = []
            while i < len(text) and (text[i].isdigit() or text[i].isspace()):
                if text[i].isdigit():
                    digits.append(text[i])
                i += 1
            if last_token_at is None or last_token_at != len(tokens) - 1:
                raise ScriptSyntaxError("count without a preceding token", start + 1)
            count = int("".join(digits))
            if count == 0:
                raise ScriptSyntaxError("repeat count must be at least 1", start + 1)
            tokens.extend(tokens[-1] for _ in range(count - 1))
            last_token_at = None
        else:
            raise ScriptSyntaxError(f"unexpected character {ch!r}", i + 1)
    return MoveScript(tuple(tokens))


def format_script(script: ScriptLike, compact: bool = False) -> str:
    tokens = list(as_script(script))
    if not compact:
        return "".join(tokens)
    out = []
    i = 0
    while i < len(tokens):
        j = i
        while j < len(tokens) and tokens[j] == tokens[i]:
            j += 1
        run = j - i
        out.append(tokens[i] if run == 1 else f"{tokens[i]}{run}")
        i = j
    return "".join(out)


def as_script(script: ScriptLike) -> MoveScript:
    if isinstance(script, MoveScript):
        return script
    if isinstance(script, str):
        return parse_script(script)
    return MoveScript(tuple(script))


def resolve_token(board: Board, token: str) -> Move:
    """The unique move that ``token`` denotes on ``board``."""
    b = as_board(board)
    try:
        color, kind, offset = _TOKEN_RULES[token]
    except KeyError:
        raise TokenError(f"unknown token {token!r}") from None
    e = b.empty_index
    src = e + offset
    if not 0 <= src < b.size:
        raise TokenError(f"{token}: hole {src} is off the board {b.cells}")
    if b.cells[src] != color.value:
        raise TokenError(
            f"{token}: hole {src} holds {b.cells[src]}, need {color.value} on {b.cells}"
        )
    return Move(kind, src, e, color)


def classify(move: Move) -> str:
    """Display label for a move.

    Productive moves map to their token.  Weight-decreasing moves get the
    token of the opposite direction prefixed with ``~`` (so ``~S`` is a
    blue step to the left); this form is display-only and does not parse.
    """
    if move.mover is Color.BLUE:
        label = "S" if move.kind is MoveKind.STEP else "J"
    else:
        label = "s" if move.kind is MoveKind.STEP else "j"
    return label if move.weight_delta > 0 else "~" + label


@dataclass(frozen=True)
class SolutionTrace:
    """A replayed move sequence.

    ``boards`` has one more entry than ``moves``; ``weight_trace[k]`` is the
    weight after move ``k``.
    """

    n: int
    boards: tuple[Board, ...]
    moves: tuple[Move, ...]
    labels: tuple[str, ...]
    weight_trace: tuple[int, ...]

    @property
    def final_board(self) -> Board:
        return self.boards[-1]

    @property
    def solved(self) -> bool:
        return self.boards[-1] == goal_board(self.n)

    @property
    def counts(self) -> dict:
        steps = sum(m.kind is MoveKind.STEP for m in self.moves)
        tally = Counter(self.labels)
        out = {"total": len(self.moves), "steps": steps, "jumps": len(self.moves) - steps}
        for t in TOKENS:
            out[t] = tally.get(t, 0)
        return out

    @property
    def deltas(self) -> tuple[int, ...]:
        return tuple(m.weight_delta for m in self.moves)

    @property
    def script(self) -> Optional[MoveScript]:
        """The token script, or None if some move is not productive."""
        if any(label.startswith("~") for label in self.labels):
            return None
        return MoveScript(self.labels)


def _start(n: int, start: Optional[Board], track_ids: bool) -> Board:
    if start is not None:
        return start
    b = initial_board(n)
    return b if track_ids else Board(n, b.cells)


def _finish(n, boards, moves, labels) -> SolutionTrace:
    w = weight(boards[0])
    weights = []
    for m in moves:
        w += m.weight_delta
        weights.append(w)
    return SolutionTrace(n, tuple(boards), tuple(moves), tuple(labels), tuple(weights))


def replay(
    n: int, script: ScriptLike, start: Optional[Board] = None, *, track_ids: bool = True
) -> SolutionTrace:
    """Replay a token script from the initial position.

    Raises :class:`ReplayError` at the first token that does not resolve.
    """
    ms = as_script(script)
    boards = [_start(n, start, track_ids)]
    moves = []
    for pos, token in enumerate(ms.tokens, start=1):
        try:
            move = resolve_token(boards[-1], token)
        except TokenError as exc:
            raise ReplayError(pos, token, boards[-1], str(exc)) from None
        moves.append(move)
        boards.append(apply_move(boards[-1], move))
    return _finish(n, boards, moves, ms.tokens)


def trace_moves(
    n: int, moves: Iterable[Move], start: Optional[Board] = None, *, track_ids: bool = True
) -> SolutionTrace:
    """Replay an arbitrary list of moves (productive or not)."""
    boards = [_start(n, start, track_ids)]
    moves = list(moves)
    for m in moves:
        boards.append(apply_move(boards[-1], m))
    return _finish(n, boards, moves, [classify(m) for m in moves])
