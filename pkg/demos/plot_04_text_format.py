"""
The text grid format
====================

One row per line, single spaces, ``.`` for empty cells.  Optional
``#order:`` and ``#alphabet:`` headers; other ``#`` lines are comments.
"""

from gensudoku import GridDocument, SymbolAlphabet, build_base_solution, parse_grid, render_grid

text = """\
# a 4x4 grid with its own symbols
#order: 2
#alphabet: x y z w
x y z w
z w x y
y . w x
w x y .
"""
doc = parse_grid(text)
print(doc.alphabet.tokens, doc.grid.filled_count, "clues")
print(render_grid(doc, header=True))

# round trip
assert parse_grid(render_grid(doc)) == doc

# any alphabet can be attached to a grid
greek = SymbolAlphabet(tuple("αβγδ"))
print(render_grid(GridDocument(greek, build_base_solution(2))))
