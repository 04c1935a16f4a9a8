"""
Building a base solution by circular shifts
===========================================

The first row lists every symbol in order. Each following row inside a
band is the previous one rotated left by one box width, and every new
band starts one symbol further along.
"""

from gensudoku import GridDocument, base_value, build_base_solution, build_iterative, render_grid, validate

# the classical 9x9 grid
grid = build_base_solution(3)
print(render_grid(GridDocument.with_default_alphabet(grid)))

# the same schedule written out row by row gives the same grid
assert build_iterative(3) == grid

# a single cell in closed form: row 4 (0-based), column 0
print("cell (4, 0) holds symbol", base_value(3, 4, 0) + 1)

# every order gives a valid grid; here 16x16 with letters A..P
big = build_base_solution(4)
print(render_grid(GridDocument.with_default_alphabet(big)))
print(validate(big))

# n = 5 uses decimal symbols 1..25
print(render_grid(GridDocument.with_default_alphabet(build_base_solution(5))).splitlines()[0])
