"""Exact rational linear programming by a dense two-phase simplex.

Problems are stated as: maximize c.x subject to normal.x >= bound rows,
with x free.  Internally x is split into a difference of nonnegative
variables and surplus variables are added; Bland's rule keeps the exact
pivoting finite.  Sizes here are tiny (tens of rows), so a dense tableau
over Fraction is entirely adequate.
"""

from __future__ import annotations

from fractions import Fraction

Q = Fraction

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


def _pivot(tab, basis, row, col):
    inv = Q(1) / tab[row][col]
    tab[row] = [x * inv for x in tab[row]]
    for i, r in enumerate(tab):
        if i != row and r[col]:
            f = r[col]
            piv = tab[row]
            tab[i] = [x - f * y for x, y in zip(r, piv)]
    basis[row] = col


def _run_simplex(tab, basis, cost, ncols):
    """Minimize cost over the tableau; returns status.  cost is priced out
    into a working objective row appended to the tableau."""
    m = len(tab)
    obj = list(cost) + [Q(0)]
    for i, b in enumerate(basis):
        if obj[b]:
            f = obj[b]
            obj = [x - f * y for x, y in zip(obj, tab[i])]
    while True:
        col = next((j for j in range(ncols) if obj[j] < 0), None)
        if col is None:
            return OPTIMAL, obj, tab, basis
        best = None
        for i in range(m):
            if tab[i][col] > 0:
                ratio = tab[i][-1] / tab[i][col]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED, obj, tab, basis
        row = best[1]
        _pivot(tab, basis, row, col)
        f = obj[col]
        if f:
            obj = [x - f * y for x, y in zip(obj, tab[row])]


def solve_max(objective, rows, nvars):
    """Maximize objective.x over {x : normal.x >= bound for (normal, bound) in rows}.

    Returns (status, value, x) where status is one of 'optimal', 'unbounded',
    'infeasible'; value and x are None unless optimal.
    """
    m = len(rows)
    ncols = 2 * nvars + m
    tab = []
    for i, (normal, bound) in enumerate(rows):
        if len(normal) != nvars:
            raise ValueError("dimension mismatch")
        row = [Q(v) for v in normal] + [-Q(v) for v in normal] + [Q(0)] * m + [Q(bound)]
        row[2 * nvars + i] = Q(-1)
        if row[-1] < 0:
            row = [-x for x in row]
        tab.append(row)

    # phase 1: artificial basis
    art = ncols
    for i in range(m):
        for j in range(m):
            tab[i].insert(ncols + j, Q(1) if i == j else Q(0))
    basis = [art + i for i in range(m)]
    cost1 = [Q(0)] * ncols + [Q(1)] * m
    status, obj, tab, basis = _run_simplex(tab, basis, cost1, ncols + m)
    if status != OPTIMAL or obj[-1] != 0:
        # phase-1 objective is bounded below by 0, so status is 'optimal';
        # a positive residual means the constraints are inconsistent
        return INFEASIBLE, None, None
    for i in range(m):
        if basis[i] >= art:
            col = next((j for j in range(ncols) if tab[i][j]), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    keep = [i for i in range(m) if basis[i] < art]
    tab = [tab[i][:ncols] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # phase 2
    cost2 = [-Q(v) for v in objective] + [Q(v) for v in objective] + [Q(0)] * m
    status, obj, tab, basis = _run_simplex(tab, basis, cost2, ncols)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [Q(0)] * (2 * nvars)
    for i, b in enumerate(basis):
        if b < 2 * nvars:
            x[b] = tab[i][-1]
    point = tuple(x[j] - x[nvars + j] for j in range(nvars))
    return OPTIMAL, obj[-1], point


def max_uniform_slack(rows, nvars):
    """Maximize t (capped at 1) such that normal.x - t >= bound for all rows.

    The optimum is > 0 exactly when the strict system normal.x > bound is
    feasible, and >= 0 exactly when the closed system is feasible.  Returns
    (t, x).
    """
    ext = [(tuple(normal) + (-1,), bound) for normal, bound in rows]
    ext.append(((0,) * nvars + (-1,), Q(-1)))
    objective = (0,) * nvars + (1,)
    status, value, point = solve_max(objective, ext, nvars + 1)
    if status != OPTIMAL:
        raise RuntimeError(f"slack program ended {status}")
    return value, point[:nvars]


def strict_interior(rows, nvars):
    """A point satisfying every row strictly, or None."""
    t, x = max_uniform_slack(rows, nvars)
    return x if t > 0 else None


def closed_feasible(rows, nvars) -> bool:
    t, _ = max_uniform_slack(rows, nvars)
    return t >= 0
