"""
Solving and making puzzles
==========================

The solver enumerates completions deterministically.  ``make_puzzle``
blanks cells while a capped solution count confirms the answer stays unique.
"""

from gensudoku import (
    GridDocument,
    ScramblePlan,
    build_base_solution,
    count_solutions,
    empty_grid,
    make_puzzle,
    render_grid,
    scramble,
    solve,
)

# every 4x4 Sudoku
outcome = solve(empty_grid(2))
print(len(outcome.solutions), "solutions, exhausted:", outcome.exhausted)

# a 9x9 puzzle from a scrambled base grid
solution = scramble(build_base_solution(3), ScramblePlan(seed=7, steps=60))
puzzle = make_puzzle(solution, seed=11, target_clues=28)
print(render_grid(GridDocument.with_default_alphabet(puzzle)))
print("clues:", puzzle.filled_count, "count (cap 2):", count_solutions(puzzle, 2))

solved = solve(puzzle, cap=2)
assert solved.solutions == (solution,)
print("nodes expanded:", solved.nodes_expanded)
