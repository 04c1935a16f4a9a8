"""Generalized n^2 x n^2 Sudoku: circular-shift construction, validity-preserving
transforms, a deterministic backtracking solver and a text grid format."""

from .construction import (
    band_position,
    base_value,
    build_base_solution,
    build_iterative,
    build_with_alphabet_order,
)
from .errors import (
    AlphabetError,
    IndexRangeError,
    InvalidSolutionError,
    LineCountError,
    ParseError,
    PermutationError,
    RowShapeError,
    ShapeError,
    SudokuError,
    UnknownTokenError,
)
from .grid import EMPTY, Grid, Order, ValidityReport, Violation, empty_grid, new_grid, validate
from .rng import XorShift64Star
from .solver import SolutionCount, SolveOutcome, count_solutions, make_puzzle, solve
from .textio import GridDocument, SymbolAlphabet, parse_grid, render_grid
from .transforms import (
    RelabelSymbols,
    ScramblePlan,
    SwapBands,
    SwapColsInStack,
    SwapRowsInBand,
    SwapStacks,
    Transform,
    Transpose,
    apply_transform,
    permute_cols_unchecked,
    permute_rows_unchecked,
    permute_symbols,
    scramble,
)

__version__ = "0.1.0"
