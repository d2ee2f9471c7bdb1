from fractions import Fraction as F

import pytest

from magoglab.lp import Feasible, Infeasible, solve_feasibility


def test_simple_feasible():
    # x1*(1,0) + x2*(0,1) = (2,3)
    out = solve_feasibility([[1, 0], [0, 1]], [2, 3])
    assert isinstance(out, Feasible)
    assert out.x == {0: F(2), 1: F(3)}


def test_simple_infeasible_with_certificate():
    # columns all have nonnegative coordinates; rhs has a negative one
    out = solve_feasibility([[1, 0], [1, 1]], [F(1), F(-1)])
    assert isinstance(out, Infeasible)
    y = out.y
    for col in ([1, 0], [1, 1]):
        assert sum(a * b for a, b in zip(y, col)) <= 0
    assert y[0] * 1 + y[1] * (-1) > 0


def test_convexity_row_forces_affine_combination():
    # (1/2, 1/2) is a convex combination of (0,1) and (1,0)
    cols = [[0, 1, 1], [1, 0, 1]]
    out = solve_feasibility(cols, [F(1, 2), F(1, 2), 1])
    assert isinstance(out, Feasible)
    assert sum(out.x.values()) == 1


def test_point_outside_segment():
    cols = [[0, 1, 1], [1, 0, 1]]
    out = solve_feasibility(cols, [F(2), F(-1), 1])
    assert isinstance(out, Infeasible)


def test_rational_columns():
    cols = [[F(1, 2), 1], [F(1, 3), 1]]
    out = solve_feasibility(cols, [F(5, 12), 1])
    assert isinstance(out, Feasible)
    total = sum(out.x.values())
    mass = sum(w * cols[j][0] for j, w in out.x.items())
    assert total == 1 and mass == F(5, 12)


def test_degenerate_duplicate_columns():
    cols = [[0, 0, 1]] * 5
    out = solve_feasibility(cols, [0, 0, 1])
    assert isinstance(out, Feasible)
    assert sum(out.x.values()) == 1


def test_column_length_mismatch():
    with pytest.raises(ValueError):
        solve_feasibility([[1, 0]], [1, 0, 0])
