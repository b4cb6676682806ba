# coding: utf-8
# The move notation
#
# S and s are steps, J and j are jumps; upper case moves a blue peg, lower case
# a red one.  Every token names at most one legal move on any board.

# %%
from pegswap import parse_script, format_script, replay
from pegswap.notation import ReplayError, ScriptSyntaxError

script = parse_script("Sj s J2 s j S")
print(script.tokens, format_script(script), format_script(script, compact=True))

# %%
t = replay(2, script)
for board, label, w in zip(t.boards[1:], t.labels, t.weight_trace):
    print(label, board.cells, w)

# %%
# Bad characters are reported with a 1-based position.
try:
    parse_script("SxJ")
except ScriptSyntaxError as err:
    print(err)

# %%
# "SS" is legal but leaves the puzzle unsolved; a third S has nothing to move.
print(replay(2, "SS").final_board.cells)
try:
    replay(2, "SSS")
except ReplayError as err:
    print(err.position, err.token, err.board.cells)

# %%
# Traces serialise to JSON with a stable key order.
from pegswap.documents import dumps, trace_document

print(dumps(trace_document(replay(1, "SjS"))))
