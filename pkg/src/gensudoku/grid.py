"""Core value types for generalized n^2 x n^2 Sudoku grids, and the validator.

Cells hold 0-based symbol indices; an empty cell is stored as ``EMPTY`` (-1)
internally and exposed as ``None`` by the list-based accessors.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence

import numpy as np

from .errors import IndexRangeError, PermutationError, ShapeError

EMPTY = -1

UNIT_KINDS = ("row", "column", "box")


@dataclass(frozen=True, order=True)
class Order:
    """Box side ``n``; the grid side is ``N = n * n``."""

    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise TypeError(f"order must be an integer, got {self.n!r}")
        if self.n < 1:
            raise IndexRangeError(f"order must be >= 1, got {self.n}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def side(self) -> int:
        return self.n * self.n

    @property
    def cells(self) -> int:
        return self.side * self.side

    @classmethod
    def from_side(cls, side: int) -> "Order":
        n = isqrt(side)
        if side < 1 or n * n != side:
            raise ShapeError(f"grid side {side} is not a perfect square n*n")
        return cls(n)


def as_order(order) -> Order:
    return order if isinstance(order, Order) else Order(order)


class Grid:
    """Immutable N x N grid of symbol indices.

    Equality and hashing are by value.  ``cells`` is a read-only int16
    array; use :meth:`to_array` for a writable copy.
    """

    __slots__ = ("_order", "_cells", "_hash")

    def __init__(self, order: Order, cells: np.ndarray):
        # trusted constructor: callers outside this package go through new_grid
        self._order = order
        cells.setflags(write=False)
        self._cells = cells
        self._hash = None

    @property
    def order(self) -> Order:
        return self._order

    @property
    def n(self) -> int:
        return self._order.n

    @property
    def side(self) -> int:
        return self._order.side

    @property
    def cells(self) -> np.ndarray:
        return self._cells

    def to_array(self) -> np.ndarray:
        return self._cells.copy()

    def rows(self) -> list[list[int | None]]:
        return [[None if v == EMPTY else v for v in row] for row in self._cells.tolist()]

    def __getitem__(self, pos: tuple[int, int]) -> int | None:
        v = int(self._cells[pos])
        return None if v == EMPTY else v

    @property
    def filled_count(self) -> int:
        return int(np.count_nonzero(self._cells != EMPTY))

    def is_complete(self) -> bool:
        return not bool((self._cells == EMPTY).any())

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return self._order == other._order and np.array_equal(self._cells, other._cells)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._order.n, self._cells.tobytes()))
        return self._hash

    def __repr__(self):
        return f"Grid(n={self.n}, filled={self.filled_count}/{self._order.cells})"

    def __str__(self):
        width = len(str(self.side))
        return "\n".join(
            " ".join(".".rjust(width) if v is None else str(v + 1).rjust(width) for v in row)
            for row in self.rows()
        )


def _from_array(order: Order, arr: np.ndarray) -> Grid:
    return Grid(order, np.ascontiguousarray(arr, dtype=np.int16))


def new_grid(order, cells: Sequence[Sequence[int | None]] | np.ndarray) -> Grid:
    """Build a grid from an N x N matrix of symbol indices.

    Empty cells may be given as ``None`` or ``EMPTY``.  Raises ``ShapeError``
    for a wrongly shaped matrix and ``IndexRangeError`` for a symbol outside
    ``0..N-1``.
    """
    order = as_order(order)
    N = order.side
    if isinstance(cells, np.ndarray):
        if cells.shape != (N, N):
            raise ShapeError(f"expected a {N}x{N} matrix, got shape {cells.shape}")
        if not np.issubdtype(cells.dtype, np.integer):
            raise IndexRangeError(f"cells must be integers, got dtype {cells.dtype}")
        arr = cells.astype(np.int64)
    else:
        rows = list(cells)
        if len(rows) != N:
            raise ShapeError(f"expected {N} rows, got {len(rows)}")
        arr = np.empty((N, N), dtype=np.int64)
        for r, row in enumerate(rows):
            row = list(row)
            if len(row) != N:
                raise ShapeError(f"row {r} has {len(row)} cells, expected {N}")
            for c, v in enumerate(row):
                if v is None:
                    arr[r, c] = EMPTY
                elif isinstance(v, (int, np.integer)) and not isinstance(v, bool):
                    arr[r, c] = v
                else:
                    raise IndexRangeError(f"cell ({r}, {c}) holds non-integer {v!r}")
    bad = (arr < EMPTY) | (arr >= N)
    if bad.any():
        r, c = (int(x) for x in np.argwhere(bad)[0])
        raise IndexRangeError(f"cell ({r}, {c}) holds {int(arr[r, c])}, outside 0..{N - 1}")
    return _from_array(order, arr)


def empty_grid(order) -> Grid:
    order = as_order(order)
    return _from_array(order, np.full((order.side, order.side), EMPTY))


def box_index(n: int, row: int, col: int) -> int:
    return (row // n) * n + col // n


def box_cells(n: int, box: int) -> list[tuple[int, int]]:
    r0, c0 = (box // n) * n, (box % n) * n
    return [(r0 + k, c0 + j) for k in range(n) for j in range(n)]


@dataclass(frozen=True)
class Violation:
    kind: str  # "row" | "column" | "box"
    unit_index: int
    symbol_index: int
    positions: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ValidityReport:
    complete: bool
    violations: tuple[Violation, ...]

    @property
    def consistent(self) -> bool:
        return not self.violations

    @property
    def is_solution(self) -> bool:
        return self.complete and not self.violations


def units(cells: np.ndarray, n: int) -> dict[str, np.ndarray]:
    """Row, column and box views of ``cells``, each shaped (unit, member)."""
    N = n * n
    boxes = cells.reshape(n, n, n, n).transpose(0, 2, 1, 3).reshape(N, N)
    return {"row": cells, "column": cells.T, "box": boxes}


def _member_position(kind: str, n: int, unit: int, member: int) -> tuple[int, int]:
    if kind == "row":
        return unit, member
    if kind == "column":
        return member, unit
    return (unit // n) * n + member // n, (unit % n) * n + member % n


def validate(grid: Grid) -> ValidityReport:
    """Report every symbol repeated within a row, column or box.

    Violations are ordered by kind (row, column, box), then unit index, then
    symbol index; positions within a violation are in row-major order.
    """
    n, N = grid.n, grid.side
    cells = grid.cells
    complete = not bool((cells == EMPTY).any())
    violations = []
    unit_index = np.repeat(np.arange(N), N).reshape(N, N)
    for kind, view in units(cells, n).items():
        filled = view != EMPTY
        keys = unit_index[filled] * N + view[filled]
        counts = np.bincount(keys, minlength=N * N).reshape(N, N)
        for u, s in np.argwhere(counts > 1).tolist():
            members = np.flatnonzero(view[u] == s).tolist()
            positions = tuple(sorted(_member_position(kind, n, u, m) for m in members))
            violations.append(Violation(kind, u, s, positions))
    return ValidityReport(complete, tuple(violations))


def is_solution(grid: Grid) -> bool:
    return validate(grid).is_solution


def check_permutation(perm: Iterable[int], size: int, what: str = "permutation") -> np.ndarray:
    """Return ``perm`` as an int array, raising PermutationError unless it is a bijection on 0..size-1."""
    try:
        arr = np.asarray(list(perm))
    except TypeError:
        raise PermutationError(f"{what} must be a sequence of integers") from None
    if arr.shape != (size,) or (size and not np.issubdtype(arr.dtype, np.integer)):
        raise PermutationError(f"{what} must list {size} integers, got {arr.tolist()}")
    if size and not np.array_equal(np.sort(arr), np.arange(size)):
        raise PermutationError(f"{what} {arr.tolist()} is not a bijection on 0..{size - 1}")
    return arr.astype(np.int64)
