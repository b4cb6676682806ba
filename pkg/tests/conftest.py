from collections import deque

import pytest

from pegswap.board import apply_move, goal_board, initial_board, legal_moves

_ACCEPTANCE_LINES = []


def naive_distances(n):
    """Plain dict BFS over Board objects; shares no code with the packed search."""
    start = initial_board(n)
    dist = {start.cells: 0}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        for m in legal_moves(b):
            nb = apply_move(b, m)
            if nb.cells not in dist:
                dist[nb.cells] = dist[b.cells] + 1
                queue.append(nb)
    return dist


def naive_min_moves(n):
    return naive_distances(n)[goal_board(n).cells]


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in _ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
