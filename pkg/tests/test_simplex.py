"""Two-phase simplex: small frozen LPs and the feasibility checker."""

import numpy as np
import pytest

from isolab.simplex import LPProblem, LPSolution, check_feasible, solve


def _lp(c, rows, sense="min", free=()):
    return LPProblem.from_rows(c, rows, sense=sense, free=free)


def test_single_variable_max():
    sol = solve(_lp([1.0], [([1.0], "<=", 1.0)], sense="max"))
    assert sol.ok and sol.status == "optimal"
    assert abs(sol.objective - 1.0) < 1e-12
    assert abs(sol.x[0] - 1.0) < 1e-12


def test_two_variable_vertex():
    # max 3x + 2y, x+y <= 4, x <= 2, y <= 3
    sol = solve(_lp([3, 2], [([1, 1], "<=", 4), ([1, 0], "<=", 2),
                             ([0, 1], "<=", 3)], sense="max"))
    assert sol.ok
    assert abs(sol.objective - 10.0) < 1e-9
    assert np.allclose(sol.x, [2.0, 2.0])


def test_equality_rows():
    sol = solve(_lp([1, 1], [([1, 1], "=", 2), ([1, -1], "=", 0)]))
    assert sol.ok
    assert np.allclose(sol.x, [1.0, 1.0])
    assert abs(sol.objective - 2.0) < 1e-9


def test_infeasible():
    sol = solve(_lp([1.0], [([1.0], "<=", -1.0)]))
    assert sol.status == "infeasible"
    assert sol.x is None and sol.objective is None


def test_unbounded():
    sol = solve(_lp([1.0], [([1.0], ">=", 1.0)], sense="max"))
    assert sol.status == "unbounded"


def test_free_variable_goes_negative():
    sol = solve(_lp([1.0], [([1.0], ">=", -5.0)], free=[0]))
    assert sol.ok
    assert abs(sol.x[0] + 5.0) < 1e-9


def test_degenerate_vertex():
    # three constraints meet at (1, 0); Dantzig must still terminate
    sol = solve(_lp([-1, -1], [([1, 1], "<=", 1), ([1, 0], "<=", 1),
                               ([1, 2], "<=", 1)]))
    assert sol.ok
    assert abs(sol.objective + 1.0) < 1e-9


def test_deterministic_replay():
    prob = _lp([1, 2, -1], [([1, 1, 1], "<=", 10), ([1, -1, 0], ">=", -3),
                            ([0, 1, 2], "<=", 7)])
    a = solve(prob)
    b = solve(prob)
    assert a.iterations == b.iterations
    assert a.basis == b.basis
    assert a.objective == b.objective


def test_bland_rule_agrees():
    prob = _lp([3, 2], [([1, 1], "<=", 4), ([1, 0], "<=", 2),
                        ([0, 1], "<=", 3)], sense="max")
    a = solve(prob)
    b = solve(prob, pivot_rule="bland")
    assert b.ok
    assert abs(a.objective - b.objective) < 1e-9
    with pytest.raises(ValueError):
        solve(prob, pivot_rule="steepest")


def test_solution_ok_property():
    assert LPSolution("optimal", None, 0.0, 0).ok
    assert not LPSolution("failed", None, None, 0).ok


def test_from_rows_validation():
    with pytest.raises(ValueError, match="unknown relation"):
        _lp([1.0], [([1.0], "<", 1.0)])
    with pytest.raises(ValueError, match="sense"):
        LPProblem(c=[1.0], a_ub=[[1.0]], b_ub=[1.0], sense="argmin")
    with pytest.raises(ValueError):
        LPProblem(c=[1.0], a_ub=[[1.0, 2.0]], b_ub=[1.0])
    with pytest.raises(ValueError):
        LPProblem(c=[1.0], a_ub=[[1.0]], b_ub=[1.0], free=[3])
    with pytest.raises(ValueError):
        LPProblem(c=[1.0], a_ub=[[1.0]], b_ub=None)


def test_problem_shape_properties():
    prob = _lp([1, 2], [([1, 0], "<=", 1), ([0, 1], "=", 2)])
    assert prob.num_vars == 2
    assert prob.num_rows == 2
    with pytest.raises(ValueError, match="no constraints"):
        solve(LPProblem(c=[1.0]))


def test_check_feasible_accepts_solution():
    prob = _lp([3, 2], [([1, 1], "<=", 4), ([1, 0], "<=", 2),
                        ([0, 1], "<=", 3)], sense="max")
    sol = solve(prob)
    ok, worst, bad = check_feasible(prob, sol.x)
    assert ok and not bad
    assert worst < 1e-9


def test_check_feasible_flags_violations():
    prob = _lp([1, 1], [([1, 1], "<=", 1), ([1, -1], "=", 0)])
    ok, worst, bad = check_feasible(prob, [2.0, 0.0])
    assert not ok
    assert "ub[0]" in bad and "eq[0]" in bad
    ok2, _, bad2 = check_feasible(prob, [-0.5, -0.5])
    assert not ok2
    assert "bound[0]" in bad2
    with pytest.raises(ValueError):
        check_feasible(prob, [1.0])


def test_negative_rhs_rows_need_artificials():
    # >= with positive rhs forces phase 1 to do real work
    sol = solve(_lp([2, 3], [([1, 1], ">=", 2), ([1, 0], "<=", 5),
                             ([0, 1], "<=", 5)]))
    assert sol.ok
    assert abs(sol.objective - 4.0) < 1e-9
    assert np.allclose(sol.x, [2.0, 0.0])
