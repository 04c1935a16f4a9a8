"""Independent reference implementations used only by the tests.

Nothing here imports solver or validator code from the package; grids are
plain nested lists with None for empty cells.
"""
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"


def paper_table(name):
    """Rows of a golden table as lists of tokens."""
    return [line.split() for line in (GOLDEN / name).read_text().splitlines()]


def naive_has_duplicate(rows, n):
    """Triple-loop duplicate check over rows, columns and boxes."""
    N = n * n
    for a in range(N):
        for i in range(N):
            for j in range(i + 1, N):
                # row a
                if rows[a][i] is not None and rows[a][i] == rows[a][j]:
                    return True
                # column a
                if rows[i][a] is not None and rows[i][a] == rows[j][a]:
                    return True
                # box a
                r0, c0 = (a // n) * n, (a % n) * n
                ri, ci = r0 + i // n, c0 + i % n
                rj, cj = r0 + j // n, c0 + j % n
                if rows[ri][ci] is not None and rows[ri][ci] == rows[rj][cj]:
                    return True
    return False


def _ok(rows, n, r, c, v):
    N = n * n
    for k in range(N):
        if rows[r][k] == v or rows[k][c] == v:
            return False
    r0, c0 = (r // n) * n, (c // n) * n
    for dr in range(n):
        for dc in range(n):
            if rows[r0 + dr][c0 + dc] == v:
                return False
    return True


def naive_enumerate(rows, n):
    """All completions of ``rows``, filling cells in row-major order.

    Givens are not checked against each other beyond the fill-time check, so
    callers pass only consistent partial grids or expect an empty result
    when a clash makes some cell impossible.
    """
    N = n * n
    grid = [list(r) for r in rows]
    if naive_has_duplicate(grid, n):
        return []
    cells = [(r, c) for r in range(N) for c in range(N) if grid[r][c] is None]
    out = []

    def rec(k):
        if k == len(cells):
            out.append(tuple(tuple(row) for row in grid))
            return
        r, c = cells[k]
        for v in range(N):
            if _ok(grid, n, r, c, v):
                grid[r][c] = v
                rec(k + 1)
                grid[r][c] = None

    rec(0)
    return out
