# coding: utf-8
# Closed-form solutions
#
# N blue pegs sit on the left, N red pegs on the right, with one empty hole
# between them.  The solver writes out an N^2 + 2N move solution directly.

# %%
from pegswap import SolutionForm, expected_counts, format_script, replay, solution_sequence

for N in range(1, 6):
    print(N, format_script(solution_sequence(N)))

# %%
# Long runs of one token collapse nicely in compact form.
print(format_script(solution_sequence(8), compact=True))

# %%
# The two construction routes agree token for token.
N = 30
direct = solution_sequence(N, SolutionForm.DIRECT)
symmetric = solution_sequence(N, SolutionForm.SYMMETRIC)
print(direct == symmetric, expected_counts(N))

# %%
# Midway boards for odd N follow a fixed shape.
from pegswap.closed_form import check_intermediate_patterns

for row in check_intermediate_patterns(7):
    print(row.m, row.actual, "ok" if row.ok else "MISMATCH")

# %%
t = replay(7, solution_sequence(7))
print(t.final_board.cells, t.counts, t.weight_trace[-1])
