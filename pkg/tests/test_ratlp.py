"""Exact simplex against hand cases and a floating-point reference."""

import random
from fractions import Fraction as Q

import numpy as np
from scipy.optimize import linprog

from orbitchar import ratlp


def test_simple_max():
    # maximize x1 + x2 over x1 <= 2, x2 <= 3 (rewritten as >= rows)
    rows = [((-1, 0), -2), ((0, -1), -3)]
    status, value, x = ratlp.solve_max((1, 1), rows, 2)
    assert status == ratlp.OPTIMAL
    assert value == 5 and x == (2, 3)


def test_infeasible():
    rows = [((1,), 1), ((-1,), 0)]
    status, value, x = ratlp.solve_max((1,), rows, 1)
    assert status == ratlp.INFEASIBLE


def test_unbounded():
    rows = [((1,), 0)]
    status, _, _ = ratlp.solve_max((1,), rows, 1)
    assert status == ratlp.UNBOUNDED


def test_free_variables():
    # minimum of x at x >= -7/2 reached exactly
    rows = [((1,), Q(-7, 2))]
    status, value, x = ratlp.solve_max((-1,), rows, 1)
    assert status == ratlp.OPTIMAL
    assert x == (Q(-7, 2),)


def test_strict_interior_quadrant():
    rows = [((1, 0), 0), ((0, 1), 0)]
    x = ratlp.strict_interior(rows, 2)
    assert x is not None and x[0] > 0 and x[1] > 0


def test_strict_interior_empty_on_antiparallel():
    rows = [((1,), 0), ((-1,), 0)]
    assert ratlp.strict_interior(rows, 1) is None
    assert ratlp.closed_feasible(rows, 1)


def test_closed_infeasible():
    rows = [((1,), 1), ((-1,), 0)]
    assert not ratlp.closed_feasible(rows, 1)


def test_no_rows():
    assert ratlp.strict_interior([], 2) is not None


def test_against_scipy_on_random_instances():
    rng = random.Random(917)
    checked = 0
    for _ in range(60):
        n = rng.randint(1, 4)
        m = rng.randint(1, 8)
        rows = [
            (tuple(rng.randint(-4, 4) for _ in range(n)), rng.randint(-4, 4))
            for _ in range(m)
        ]
        # box rows keep the value bounded
        for j in range(n):
            e = [0] * n
            e[j] = 1
            rows.append((tuple(e), -10))
            rows.append((tuple(-v for v in e), -10))
        c = [rng.randint(-3, 3) for _ in range(n)]
        status, value, x = ratlp.solve_max(c, rows, n)
        a_ub = np.array([[-float(v) for v in normal] for normal, _ in rows])
        b_ub = np.array([-float(b) for _, b in rows])
        ref = linprog(
            c=[-float(v) for v in c], A_ub=a_ub, b_ub=b_ub, bounds=[(None, None)] * n
        )
        if status == ratlp.INFEASIBLE:
            assert not ref.success
            continue
        assert status == ratlp.OPTIMAL
        assert ref.success
        assert abs(float(value) + ref.fun) < 1e-7
        # exact feasibility of the exact optimum
        for normal, bound in rows:
            assert sum(Q(v) * xi for v, xi in zip(normal, x)) >= bound
        checked += 1
    assert checked > 20
