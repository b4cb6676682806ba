import pytest
from hypothesis import given, strategies as st

from pegswap.board import (
    Board,
    BoardError,
    Color,
    IllegalMoveError,
    Move,
    MoveKind,
    PegId,
    all_boards,
    apply_move,
    goal_board,
    initial_board,
    legal_moves,
    move_weight_delta,
    parse_board,
    render_board,
    weight,
    weight_by_identity,
)

STEP, JUMP = MoveKind.STEP, MoveKind.JUMP
B, R = Color.BLUE, Color.RED


@pytest.mark.parametrize(
    "n, text",
    [(1, "BOR"), (2, "BBORR"), (5, "BBBBBORRRRR")],
)
def test_initial_board(n, text):
    assert render_board(initial_board(n)) == text


@pytest.mark.parametrize("n, text", [(1, "ROB"), (2, "RROBB"), (3, "RRROBBB")])
def test_goal_board(n, text):
    assert render_board(goal_board(n)) == text


@pytest.mark.parametrize("bad", [0, -1])
def test_rejects_nonpositive_n(bad):
    with pytest.raises(BoardError):
        initial_board(bad)
    with pytest.raises(BoardError):
        goal_board(bad)


def test_initial_ids_left_to_right():
    ids = initial_board(2).peg_ids
    assert ids == (PegId(B, 1), PegId(B, 2), None, PegId(R, 1), PegId(R, 2))


def test_parse_board():
    b = parse_board("BOBRR", 2)
    assert b.empty_index == 1
    assert render_board(initial_board(3)) == "BBBORRR"


@pytest.mark.parametrize(
    "text, n",
    [("BBRR", 2), ("BBXRR", 2), ("BBBRR", 2), ("BOORR", 2), ("RBORR", 2)],
)
def test_parse_board_errors(text, n):
    with pytest.raises(BoardError):
        parse_board(text, n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_render_parse_roundtrip_all_boards(n):
    for b in all_boards(n):
        assert parse_board(render_board(b), n) == b
        assert render_board(parse_board(b.cells, n)) == b.cells


def test_bad_ids_rejected():
    ids = (PegId(B, 1), PegId(B, 1), None, PegId(R, 1), PegId(R, 2))
    with pytest.raises(BoardError):
        Board(2, "BBORR", ids)
    ids = (PegId(R, 1), PegId(B, 2), None, PegId(R, 1), PegId(R, 2))
    with pytest.raises(BoardError):
        Board(2, "BBORR", ids)


def test_legal_moves_examples():
    assert legal_moves("BOR") == [Move(STEP, 0, 1, B), Move(STEP, 2, 1, R)]
    assert legal_moves("BBORR") == [
        Move(JUMP, 0, 2, B),
        Move(STEP, 1, 2, B),
        Move(STEP, 3, 2, R),
        Move(JUMP, 4, 2, R),
    ]
    assert legal_moves("OBR") == [Move(STEP, 1, 0, B), Move(JUMP, 2, 0, R)]


def test_apply_move_examples():
    assert apply_move("BBORR", Move(STEP, 1, 2, B)).cells == "BOBRR"
    assert apply_move("BOBRR", Move(JUMP, 3, 1, R)).cells == "BRBOR"
    with pytest.raises(IllegalMoveError):
        apply_move("BOR", Move(JUMP, 2, 0, R))


@pytest.mark.parametrize(
    "board, move",
    [
        ("BBORR", Move(STEP, 0, 1, B)),   # destination occupied
        ("BBORR", Move(STEP, 2, 3, R)),   # source empty
        ("BBORR", Move(STEP, 1, 2, R)),   # wrong color at source
        ("BBORR", Move(JUMP, 5, 3, R)),   # off the board
    ],
)
def test_apply_move_rejects(board, move):
    with pytest.raises(IllegalMoveError):
        apply_move(board, move)


def test_move_distance_checked():
    with pytest.raises(IllegalMoveError):
        Move(STEP, 0, 2, B)
    with pytest.raises(IllegalMoveError):
        Move(JUMP, 0, 1, B)


def test_apply_move_carries_ids():
    b = apply_move(initial_board(2), Move(STEP, 1, 2, B))
    assert b.peg_ids[2] == PegId(B, 2)
    assert b.peg_ids[1] is None


def test_weight_examples():
    for n in range(1, 8):
        assert weight(initial_board(n)) == 0
        assert weight(goal_board(n)) == 2 * n * (n + 1)
    assert weight(goal_board(2)) == 12
    assert weight("BOBRR") == 1


def test_weight_delta_examples():
    assert move_weight_delta("BBORR", Move(STEP, 1, 2, B)) == 1
    assert move_weight_delta("BOBRR", Move(JUMP, 3, 1, R)) == 2
    assert move_weight_delta("BOBRR", Move(STEP, 2, 1, B)) == -1
    with pytest.raises(IllegalMoveError):
        move_weight_delta("BOR", Move(JUMP, 2, 0, R))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exhaustive_move_properties(n):
    for b in all_boards(n):
        moves = legal_moves(b)
        assert 1 <= len(moves) <= 4
        assert [m.from_index for m in moves] == sorted(m.from_index for m in moves)
        for m in moves:
            nb = apply_move(b, m)
            assert nb.cells.count("O") == 1 and nb.cells.count("R") == n
            d = weight(nb) - weight(b)
            assert d == move_weight_delta(b, m)
            assert d in ({-1, 1} if m.kind is STEP else {-2, 2})
            assert (d > 0) == (m.direction == m.mover.forward)
            back = m.reversed()
            assert back in legal_moves(nb)
            assert apply_move(nb, back) == b


@st.composite
def walks(draw, max_n=4, max_len=60):
    n = draw(st.integers(1, max_n))
    choices = draw(st.lists(st.integers(0, 3), max_size=max_len))
    return n, choices


@given(walks())
def test_identity_weight_matches_positional(walk):
    n, choices = walk
    b = initial_board(n)
    for c in choices:
        moves = legal_moves(b)
        b = apply_move(b, moves[c % len(moves)])
        assert weight_by_identity(b) == weight(b)
