"""Base solution of the generalized Sudoku by circular shifts of the first row.

Row 1 lists the symbols in ascending order.  Inside a band (n consecutive
rows) each row is the previous one rotated left by n symbols; band b starts
with row 1 rotated left by b symbols.  In closed form::

    value(row, col) = ((row mod n) * n + row div n + col) mod N
"""
from __future__ import annotations

import numpy as np

from .errors import IndexRangeError
from .grid import Grid, _from_array, as_order, check_permutation


def base_value(order, row: int, col: int) -> int:
    order = as_order(order)
    n, N = order.n, order.side
    if not (0 <= row < N and 0 <= col < N):
        raise IndexRangeError(f"cell ({row}, {col}) outside a {N}x{N} grid")
    return ((row % n) * n + row // n + col) % N


def band_position(order, row: int) -> tuple[int, int]:
    """(band, row_in_band) of a global row index."""
    n = as_order(order).n
    return divmod(row, n)


def base_array(order) -> np.ndarray:
    order = as_order(order)
    n, N = order.n, order.side
    r = np.arange(N)[:, None]
    c = np.arange(N)[None, :]
    return ((r % n) * n + r // n + c) % N


def build_base_solution(order) -> Grid:
    order = as_order(order)
    return _from_array(order, base_array(order))


def _rotate(row: list[int], k: int) -> list[int]:
    k %= len(row)
    return row[k:] + row[:k]


def build_iterative(order) -> Grid:
    """Row-by-row construction, following the shift schedule literally.

    Kept deliberately separate from :func:`base_array` so the two can be
    cross-checked.
    """
    order = as_order(order)
    n, N = order.n, order.side
    first = list(range(N))
    rows = []
    for band in range(n):
        row = _rotate(first, band)
        rows.append(row)
        for _ in range(n - 1):
            row = _rotate(row, n)
            rows.append(row)
    return _from_array(order, np.array(rows).reshape(N, N))


def build_with_alphabet_order(order, symbol_perm) -> Grid:
    """Base solution written over a permuted alphabet: cell holds ``symbol_perm[base]``."""
    order = as_order(order)
    perm = check_permutation(symbol_perm, order.side, "symbol permutation")
    return _from_array(order, perm[base_array(order)])
