"""
Getting new solutions from old ones
===================================

Relabeling the symbols always gives another solution.  Permuting rows or
columns only does so when the permutation respects bands and stacks.
"""

import itertools

from gensudoku import (
    GridDocument,
    ScramblePlan,
    SwapBands,
    SwapRowsInBand,
    apply_transform,
    build_base_solution,
    build_with_alphabet_order,
    permute_rows_unchecked,
    render_grid,
    scramble,
    validate,
)
from gensudoku.transforms import swap_permutation


def show(grid):
    print(render_grid(GridDocument.with_default_alphabet(grid)))


# all 24 relabelings of the 4x4 base grid are distinct solutions
grids = {build_with_alphabet_order(2, p) for p in itertools.permutations(range(4))}
print(len(grids), "distinct 4x4 solutions from relabeling alone")

base = build_base_solution(3)

# swapping two rows of the same band keeps the grid valid ...
show(apply_transform(base, SwapRowsInBand(0, 0, 1)))

# ... and so does swapping whole bands
print(validate(apply_transform(base, SwapBands(0, 2))).is_solution)

# swapping rows from different bands breaks the boxes
broken = permute_rows_unchecked(base, swap_permutation(9, 0, 3))
for v in validate(broken).violations[:3]:
    print(v)

# a seeded scramble composes many safe moves; the same seed always gives the same grid
show(scramble(base, ScramblePlan(seed=2024, steps=40)))
