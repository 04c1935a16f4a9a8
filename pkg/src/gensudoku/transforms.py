"""Validity-preserving transformations of Sudoku grids and a seeded scrambler.

The checked vocabulary (``Transform`` subclasses) contains only symbol
relabeling, band-respecting row/column swaps and transposition, all of which
map solutions to solutions.  Arbitrary row or column permutations are
available through the ``*_unchecked`` functions; those can break the box
constraint and the caller has to validate the result.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IndexRangeError, InvalidSolutionError
from .grid import Grid, _from_array, check_permutation, validate
from .rng import XorShift64Star


class Transform:
    """Base class; subclasses implement :meth:`apply_array`."""

    def check(self, n: int) -> None:
        pass

    def apply_array(self, cells: np.ndarray, n: int) -> np.ndarray:
        raise NotImplementedError

    def inverse(self) -> "Transform":
        return self


def _check_index(name: str, value: int, n: int) -> None:
    if not 0 <= value < n:
        raise IndexRangeError(f"{name}={value} outside 0..{n - 1}")


@dataclass(frozen=True)
class RelabelSymbols(Transform):
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))

    def check(self, n):
        check_permutation(self.perm, n * n, "symbol permutation")

    def apply_array(self, cells, n):
        # trailing -1 so that EMPTY (-1) maps to itself
        lut = np.array(self.perm + (-1,), dtype=cells.dtype)
        return lut[cells]

    def inverse(self):
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return RelabelSymbols(tuple(inv))


@dataclass(frozen=True)
class SwapRowsInBand(Transform):
    band: int
    i: int
    j: int

    def check(self, n):
        for name in ("band", "i", "j"):
            _check_index(name, getattr(self, name), n)

    def apply_array(self, cells, n):
        out = cells.copy()
        a, b = self.band * n + self.i, self.band * n + self.j
        out[[a, b]] = cells[[b, a]]
        return out


@dataclass(frozen=True)
class SwapBands(Transform):
    a: int
    b: int

    def check(self, n):
        _check_index("a", self.a, n)
        _check_index("b", self.b, n)

    def apply_array(self, cells, n):
        out = cells.copy()
        ra = slice(self.a * n, self.a * n + n)
        rb = slice(self.b * n, self.b * n + n)
        out[ra], out[rb] = cells[rb], cells[ra]
        return out


@dataclass(frozen=True)
class SwapColsInStack(Transform):
    stack: int
    i: int
    j: int

    def check(self, n):
        for name in ("stack", "i", "j"):
            _check_index(name, getattr(self, name), n)

    def apply_array(self, cells, n):
        out = cells.copy()
        a, b = self.stack * n + self.i, self.stack * n + self.j
        out[:, [a, b]] = cells[:, [b, a]]
        return out


@dataclass(frozen=True)
class SwapStacks(Transform):
    a: int
    b: int

    def check(self, n):
        _check_index("a", self.a, n)
        _check_index("b", self.b, n)

    def apply_array(self, cells, n):
        out = cells.copy()
        ca = slice(self.a * n, self.a * n + n)
        cb = slice(self.b * n, self.b * n + n)
        out[:, ca], out[:, cb] = cells[:, cb], cells[:, ca]
        return out


@dataclass(frozen=True)
class Transpose(Transform):
    def apply_array(self, cells, n):
        return cells.T.copy()


TRANSFORM_KINDS = (RelabelSymbols, SwapRowsInBand, SwapBands, SwapColsInStack, SwapStacks, Transpose)


def apply_transform(grid: Grid, t: Transform) -> Grid:
    t.check(grid.n)
    return _from_array(grid.order, t.apply_array(grid.cells, grid.n))


def apply_transforms(grid: Grid, transforms) -> Grid:
    n = grid.n
    cells = grid.cells
    for t in transforms:
        t.check(n)
        cells = t.apply_array(cells, n)
    return _from_array(grid.order, cells)


def permute_symbols(grid: Grid, perm) -> Grid:
    return apply_transform(grid, RelabelSymbols(tuple(perm)))


def permute_rows_unchecked(grid: Grid, row_perm) -> Grid:
    """Row ``r`` of the result is row ``row_perm[r]`` of the input. No validity guarantee."""
    perm = check_permutation(row_perm, grid.side, "row permutation")
    return _from_array(grid.order, grid.cells[perm])


def permute_cols_unchecked(grid: Grid, col_perm) -> Grid:
    """Column ``c`` of the result is column ``col_perm[c]`` of the input. No validity guarantee."""
    perm = check_permutation(col_perm, grid.side, "column permutation")
    return _from_array(grid.order, grid.cells[:, perm])


def swap_permutation(size: int, a: int, b: int) -> list[int]:
    perm = list(range(size))
    perm[a], perm[b] = perm[b], perm[a]
    return perm


@dataclass(frozen=True)
class ScramblePlan:
    seed: int
    steps: int

    def __post_init__(self):
        if not 0 <= self.seed < 1 << 64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.steps < 0:
            raise ValueError(f"steps must be non-negative, got {self.steps}")

    def transforms(self, order) -> list[Transform]:
        """The transform sequence for grids of box side ``order``.

        Each step draws a kind uniformly from TRANSFORM_KINDS, then its
        parameters uniformly (swap indices are drawn independently, so a
        step may be the identity).
        """
        n = getattr(order, "n", order)
        rng = XorShift64Star(self.seed)
        seq = []
        for _ in range(self.steps):
            kind = TRANSFORM_KINDS[rng.below(len(TRANSFORM_KINDS))]
            if kind is RelabelSymbols:
                seq.append(RelabelSymbols(tuple(rng.permutation(n * n))))
            elif kind in (SwapRowsInBand, SwapColsInStack):
                seq.append(kind(rng.below(n), rng.below(n), rng.below(n)))
            elif kind in (SwapBands, SwapStacks):
                seq.append(kind(rng.below(n), rng.below(n)))
            else:
                seq.append(Transpose())
        return seq


def scramble(grid: Grid, plan: ScramblePlan) -> Grid:
    if not validate(grid).is_solution:
        raise InvalidSolutionError("scramble needs a complete grid with no violations")
    return apply_transforms(grid, plan.transforms(grid.n))
