import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gensudoku import (
    EMPTY,
    IndexRangeError,
    Order,
    ShapeError,
    build_base_solution,
    empty_grid,
    new_grid,
    validate,
)
from gensudoku.transforms import permute_rows_unchecked, swap_permutation
from oracles import naive_has_duplicate, paper_table


def paper_indices(name):
    table = paper_table(name)
    alphabet = sorted(set(table[0]), key=table[0].index)
    return [[alphabet.index(t) for t in row] for row in table]


def test_order_fields():
    assert Order(3).side == 9
    assert Order(1).side == 1
    with pytest.raises(IndexRangeError):
        Order(0)


def test_new_grid_empty():
    g = new_grid(3, [[None] * 9 for _ in range(9)])
    assert g == empty_grid(3)
    assert g.filled_count == 0


def test_new_grid_paper_table():
    g = new_grid(3, paper_indices("base3.txt"))
    assert g.rows()[0] == list(range(9))


def test_new_grid_shape_errors():
    with pytest.raises(ShapeError):
        new_grid(3, [[None] * 9 for _ in range(8)])
    with pytest.raises(ShapeError):
        new_grid(2, [[0, 1, 2, 3]] * 3 + [[0, 1, 2]])
    with pytest.raises(ShapeError):
        new_grid(2, np.zeros((4, 5), dtype=int))


def test_new_grid_index_errors():
    with pytest.raises(IndexRangeError):
        new_grid(2, [[4, None, None, None]] + [[None] * 4] * 3)
    with pytest.raises(IndexRangeError):
        new_grid(2, [[-2, None, None, None]] + [[None] * 4] * 3)


def test_grid_is_immutable():
    g = build_base_solution(2)
    with pytest.raises(ValueError):
        g.cells[0, 0] = 1
    arr = g.to_array()
    arr[0, 0] = 3
    assert g[0, 0] == 0


def test_validate_base3_is_solution():
    report = validate(new_grid(3, paper_indices("base3.txt")))
    assert report.complete and report.violations == ()
    assert report.is_solution


def test_validate_empty_grid():
    report = validate(empty_grid(3))
    assert not report.complete
    assert report.violations == ()


def test_validate_rows_0_and_3_swapped():
    g = permute_rows_unchecked(build_base_solution(3), swap_permutation(9, 0, 3))
    report = validate(g)
    assert report.complete
    assert all(v.kind == "box" for v in report.violations)
    top_left = [v for v in report.violations if v.unit_index == 0]
    # rows 2 3 4 / 4 5 6 / 7 8 9: symbol "4" (index 3) twice
    assert len(top_left) == 1
    assert top_left[0].symbol_index == 3
    assert top_left[0].positions == ((0, 2), (1, 0))


def test_validate_column_duplicate():
    rows = [[None] * 4 for _ in range(4)]
    rows[0][0] = 0
    rows[2][0] = 0
    report = validate(new_grid(2, rows))
    assert len(report.violations) == 1
    v = report.violations[0]
    assert (v.kind, v.unit_index, v.symbol_index, v.positions) == ("column", 0, 0, ((0, 0), (2, 0)))


def test_validate_lists_all_positions_and_orders_violations():
    rows = [[None] * 4 for _ in range(4)]
    rows[1][0] = rows[1][1] = rows[1][3] = 2
    report = validate(new_grid(2, rows))
    kinds = [(v.kind, v.unit_index) for v in report.violations]
    assert kinds == [("row", 1), ("box", 0)]
    assert report.violations[0].positions == ((1, 0), (1, 1), (1, 3))


def random_grid(rng, n, fill):
    N = n * n
    arr = rng.integers(0, N, size=(N, N))
    arr[rng.random((N, N)) > fill] = EMPTY
    return new_grid(n, arr)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_validate_matches_naive_check(n):
    rng = np.random.default_rng(n)
    for fill in np.linspace(0.0, 1.0, 40):
        g = random_grid(rng, n, fill)
        assert (validate(g).violations == ()) == (not naive_has_duplicate(g.rows(), n))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**32 - 1), st.floats(0, 1))
def test_validate_matches_naive_check_property(n, seed, fill):
    g = random_grid(np.random.default_rng(seed), n, fill)
    report = validate(g)
    assert (report.violations == ()) == (not naive_has_duplicate(g.rows(), n))
    assert validate(g) == report


def test_solution_units_are_full_sets():
    g = build_base_solution(3)
    assert validate(g).is_solution
    full = set(range(9))
    rows = g.rows()
    for k in range(9):
        assert set(rows[k]) == full
        assert {rows[r][k] for r in range(9)} == full
        r0, c0 = (k // 3) * 3, (k % 3) * 3
        assert {rows[r0 + i][c0 + j] for i in range(3) for j in range(3)} == full
