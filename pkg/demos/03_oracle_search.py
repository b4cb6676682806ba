# coding: utf-8
# Breadth-first search over every board
#
# States pack the empty-hole index above a bitmask of red pegs.  A perfect
# rank into a numpy bool array replaces a hash set of visited states.

# %%
import time

import numpy as np

from pegswap.oracle import bfs_min_moves, memory_estimate, rank_states, encode_state, state_count
from pegswap.board import initial_board, goal_board

for N in range(1, 9):
    r = bfs_min_moves(N)
    print(N, r.min_moves, N * N + 2 * N, r.reachable_states, state_count(N), f"{r.elapsed:.3f}s")

# %%
packed = np.array([encode_state(initial_board(3)), encode_state(goal_board(3))])
print(rank_states(packed, 3), state_count(3))

# %%
print({N: f"{memory_estimate(N) / 2**20:.1f} MiB" for N in (8, 10, 12)})

# %%
# Worker threads split each frontier; results do not depend on the count.
for workers in (1, 4):
    t0 = time.perf_counter()
    r = bfs_min_moves(10, workers=workers)
    print(workers, r.min_moves, r.reachable_states, f"{time.perf_counter() - t0:.1f}s")

# %%
r = bfs_min_moves(10, bidirectional=True)
print("bidirectional", r.min_moves, r.peak_frontier)

# %%
from pegswap.oracle import max_increasing_jump_run

print({N: max_increasing_jump_run(N) for N in range(1, 5)})
