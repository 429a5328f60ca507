from fractions import Fraction as Q

import numpy as np
import pytest
from scipy.optimize import linprog

from convexdist.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, feasible_combination, solve_lp


def test_basic_maximize():
    # max x + y st x <= 2, y <= 3, x + y <= 4
    res = solve_lp([1, 1], A_ub=[[1, 0], [0, 1], [1, 1]], b_ub=[2, 3, 4])
    assert res.status == OPTIMAL
    assert res.value == 4


def test_infeasible_and_unbounded():
    res = solve_lp([1], A_ub=[[1], [-1]], b_ub=[1, -2])
    assert res.status == INFEASIBLE
    res = solve_lp([1], A_ub=[[-1]], b_ub=[0])
    assert res.status == UNBOUNDED


def test_equality_constraints():
    # max x st x + y = 1, x,y >= 0
    res = solve_lp([1, 0], A_eq=[[1, 1]], b_eq=[1])
    assert res.status == OPTIMAL
    assert res.value == 1
    assert res.x == (Q(1), Q(0))


def test_feasible_combination():
    # 1/2 = convex combination of 0 and 1
    sol = feasible_combination([[0, 1], [1, 1]], [Q(1, 2), Q(1)])
    assert sol is not None
    assert sol[0] + sol[1] == 1 and sol[1] == Q(1, 2)
    assert feasible_combination([[0, 1], [1, 1]], [Q(2), Q(1)]) is None


def test_against_scipy_random():
    rng = np.random.default_rng(5)
    for _ in range(40):
        m, n = rng.integers(2, 6), rng.integers(2, 5)
        A = rng.integers(-4, 5, size=(m, n))
        b = rng.integers(1, 8, size=m)  # x=0 feasible
        c = rng.integers(-3, 4, size=n)
        ours = solve_lp([Q(int(v)) for v in c],
                        A_ub=[[Q(int(v)) for v in row] for row in A],
                        b_ub=[Q(int(v)) for v in b])
        ref = linprog(-c.astype(float), A_ub=A.astype(float),
                      b_ub=b.astype(float), bounds=(0, None), method="highs")
        if ours.status == OPTIMAL:
            assert ref.status == 0
            assert float(ours.value) == pytest.approx(-ref.fun, abs=1e-7)
        elif ours.status == UNBOUNDED:
            assert ref.status == 3
