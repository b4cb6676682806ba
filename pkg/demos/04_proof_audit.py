# coding: utf-8
# Auditing the lower bound on a concrete solution
#
# Each red-blue pair crosses an odd number of times, so at least N^2 moves are
# first crosses.  The remaining moves are grouped so that each group gains at
# most one unit of weight per move on average.

# %%
import random

from pegswap import audit_solution, solution_sequence
from pegswap.oracle import bfs_min_moves, random_solution

report = audit_solution(4, solution_sequence(4))
print(report.passed, report.first_cross_count, report.final_weight, report.implied_minimum)
print(report.group_counts())

# %%
witness = bfs_min_moves(5, want_path=True).path
print(audit_solution(5, witness).passed)

# %%
# Longer random solutions exercise every group kind.
rng = random.Random(3)
report = audit_solution(3, random_solution(3, rng))
print(report.move_count, report.group_counts(), report.failures)

# %%
# On some walks the pairing rule wants a move another group already owns.
# Merging the clashing groups keeps the average gain at or below one.
clashes = merged_ok = 0
for _ in range(300):
    r = audit_solution(3, random_solution(3, rng))
    if r.grouping.conflicts:
        clashes += 1
        merged_ok += bool(r.checks["merged_block_average"])
print(clashes, merged_ok)
