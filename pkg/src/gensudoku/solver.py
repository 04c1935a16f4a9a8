"""Deterministic backtracking solver, solution counter and puzzle masker.

Search order is part of the contract: the next cell is the empty cell with
the fewest candidates (ties go to the lowest row-major position) and its
candidates are tried in ascending symbol order.  A cell with a single
candidate is therefore always filled before any branching, which is the
naked-singles propagation.  Unit occupancy is kept as one bitmask per row,
column and box.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import IndexRangeError, InvalidSolutionError
from .grid import EMPTY, Grid, _from_array, validate
from .rng import XorShift64Star


@dataclass(frozen=True)
class SolveOutcome:
    solutions: tuple[Grid, ...]
    exhausted: bool
    nodes_expanded: int


class SolutionCount(NamedTuple):
    count: int
    exhausted: bool


class CandidateState:
    """Occupancy masks for one partially filled grid.

    ``conflict`` is set when two givens clash; such a grid has no solutions.
    """

    def __init__(self, values: list[int], n: int):
        N = n * n
        self.n = n
        self.full = (1 << N) - 1
        self.values = list(values)
        self.rows = [0] * N
        self.cols = [0] * N
        self.boxes = [0] * N
        self.cell_row = [i // N for i in range(N * N)]
        self.cell_col = [i % N for i in range(N * N)]
        self.cell_box = [(i // N // n) * n + (i % N) // n for i in range(N * N)]
        self.conflict = False
        for i, v in enumerate(self.values):
            if v != EMPTY:
                bit = 1 << v
                r, c, b = self.cell_row[i], self.cell_col[i], self.cell_box[i]
                if (self.rows[r] | self.cols[c] | self.boxes[b]) & bit:
                    self.conflict = True
                self.rows[r] |= bit
                self.cols[c] |= bit
                self.boxes[b] |= bit

    def candidates(self, i: int) -> int:
        v = self.values[i]
        if v != EMPTY:
            return 1 << v
        return self.full & ~(
            self.rows[self.cell_row[i]] | self.cols[self.cell_col[i]] | self.boxes[self.cell_box[i]]
        )


def _search(values: list[int], n: int, cap: int | None, collect: bool):
    """Core DFS. Returns (solutions, count, exhausted, nodes)."""
    state = CandidateState(values, n)
    if state.conflict:
        return [], 0, True, 0
    vals = state.values
    rows, cols, boxes = state.rows, state.cols, state.boxes
    cr, cc, cb = state.cell_row, state.cell_col, state.cell_box
    full = state.full
    empties = [i for i, v in enumerate(vals) if v == EMPTY]
    solutions = []
    count = 0
    nodes = 0
    # frames of (cell, untried candidate mask)
    stack: list[list[int]] = []

    def place(i, bit):
        vals[i] = bit.bit_length() - 1
        rows[cr[i]] |= bit
        cols[cc[i]] |= bit
        boxes[cb[i]] |= bit

    def unplace(i):
        bit = ~(1 << vals[i])
        vals[i] = EMPTY
        rows[cr[i]] &= bit
        cols[cc[i]] &= bit
        boxes[cb[i]] &= bit

    def backtrack() -> bool:
        # advance to the next untried alternative; False when the tree is done
        while stack:
            frame = stack[-1]
            i = frame[0]
            unplace(i)
            rest = frame[1]
            if rest:
                bit = rest & -rest
                frame[1] = rest ^ bit
                place(i, bit)
                return True
            stack.pop()
        return False

    while True:
        nodes += 1
        best = -1
        best_mask = 0
        best_count = 1 << 30
        dead = False
        for i in empties:
            if vals[i] != EMPTY:
                continue
            mask = full & ~(rows[cr[i]] | cols[cc[i]] | boxes[cb[i]])
            if not mask:
                dead = True
                break
            k = mask.bit_count()
            if k < best_count:
                best, best_mask, best_count = i, mask, k
                if k == 1:
                    break
        if dead:
            if not backtrack():
                return solutions, count, True, nodes
            continue
        if best < 0:
            count += 1
            if collect:
                solutions.append(list(vals))
            if cap is not None and count >= cap:
                exhausted = not any(frame[1] for frame in stack)
                return solutions, count, exhausted, nodes
            if not backtrack():
                return solutions, count, True, nodes
            continue
        bit = best_mask & -best_mask
        stack.append([best, best_mask ^ bit])
        place(best, bit)


def _check_cap(cap):
    if cap is not None and cap < 1:
        raise IndexRangeError(f"cap must be a positive integer or None, got {cap}")


def solve(grid: Grid, cap: int | None = None) -> SolveOutcome:
    """Enumerate up to ``cap`` completions of ``grid`` (``None`` = all)."""
    _check_cap(cap)
    N = grid.side
    sols, _, exhausted, nodes = _search(grid.cells.ravel().tolist(), grid.n, cap, True)
    grids = tuple(_from_array(grid.order, np.array(s).reshape(N, N)) for s in sols)
    return SolveOutcome(grids, exhausted, nodes)


def count_solutions(grid: Grid, cap: int) -> SolutionCount:
    _check_cap(cap)
    _, count, exhausted, _ = _search(grid.cells.ravel().tolist(), grid.n, cap, False)
    return SolutionCount(count, exhausted)


def make_puzzle(solution: Grid, seed: int, target_clues: int) -> Grid:
    """Blank cells of ``solution`` in seeded-random order while the puzzle stays unique.

    A removal is kept only when the puzzle still has exactly one completion.
    Stops once ``target_clues`` clues remain or every cell has been tried.
    """
    if not validate(solution).is_solution:
        raise InvalidSolutionError("make_puzzle needs a complete grid with no violations")
    total = solution.order.cells
    if not 0 <= target_clues <= total:
        raise IndexRangeError(f"target_clues must be in 0..{total}, got {target_clues}")
    rng = XorShift64Star(seed)
    order = rng.permutation(total)
    values = solution.cells.ravel().tolist()
    clues = total
    for i in order:
        if clues <= target_clues:
            break
        v = values[i]
        values[i] = EMPTY
        _, count, _, _ = _search(values, solution.n, 2, False)
        if count == 1:
            clues -= 1
        else:
            values[i] = v
    return _from_array(solution.order, np.array(values).reshape(solution.side, solution.side))
