"""Exact rational linear programming.

Solves

    minimize  c.x   subject to  A x >= b,  0 <= x <= u

by running the primal simplex method on the dual packing problem

    maximize  b.y - u.z   subject to  A^T y - z <= c,  y, z >= 0,

whose origin is feasible once every cost is nonnegative (negative-cost
variables with a finite upper bound are complemented first). The tableau is
kept in integers with a common denominator (integer pivoting), pivots follow
Bland's smallest-index rule, and both primal and dual solutions are checked in
exact arithmetic before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from .errors import Infeasible

Number = int | Fraction


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    row_duals: tuple[Fraction, ...]
    bound_duals: tuple[Fraction, ...]
    pivots: int


def _denominator_lcm(values) -> int:
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out


def check_certificate(
    rows: Sequence[Sequence[Number]],
    rhs: Sequence[Number],
    objective: Sequence[Number],
    bounds: Sequence[Number | None],
    sol: LPSolution,
) -> bool:
    """True iff x is primal feasible, (y, z) dual feasible and the objectives agree."""
    m, n = len(rows), len(objective)
    x, y, z = sol.x, sol.row_duals, sol.bound_duals
    if len(x) != n or len(y) != m or len(z) != n:
        return False
    if any(v < 0 for v in x) or any(v < 0 for v in y) or any(v < 0 for v in z):
        return False
    for j in range(n):
        if bounds[j] is not None and x[j] > bounds[j]:
            return False
        if bounds[j] is None and z[j] != 0:
            return False
    for i in range(m):
        if sum(Fraction(rows[i][j]) * x[j] for j in range(n) if rows[i][j]) < rhs[i]:
            return False
    for j in range(n):
        if sum(Fraction(rows[i][j]) * y[i] for i in range(m) if rows[i][j]) - z[j] > objective[j]:
            return False
    primal = sum(Fraction(objective[j]) * x[j] for j in range(n))
    dual = sum(Fraction(rhs[i]) * y[i] for i in range(m)) - sum(
        Fraction(bounds[j]) * z[j] for j in range(n) if bounds[j] is not None
    )
    return primal == dual == sol.value


def rational_lp_solve(
    rows: Sequence[Sequence[Number]],
    objective: Sequence[Number],
    bounds: Sequence[Number | None] | None = None,
    rhs: Sequence[Number] | None = None,
) -> LPSolution:
    """Minimize ``objective . x`` subject to ``rows x >= rhs`` and ``0 <= x <= bounds``.

    ``rhs`` defaults to all ones, ``bounds`` to no upper bounds. A variable
    with negative cost must have a finite upper bound.

    Raises ``Infeasible`` when no x satisfies the constraints.
    """
    n = len(objective)
    m = len(rows)
    if bounds is None:
        bounds = [None] * n
    if rhs is None:
        rhs = [1] * m
    if len(bounds) != n or len(rhs) != m or any(len(r) != n for r in rows):
        raise ValueError("inconsistent LP dimensions")
    A = [[Fraction(v) for v in r] for r in rows]
    b = [Fraction(v) for v in rhs]
    c = [Fraction(v) for v in objective]
    u = [None if v is None else Fraction(v) for v in bounds]
    if any(v is not None and v < 0 for v in u):
        raise Infeasible("negative upper bound")

    # complement negative-cost variables: x_j = u_j - x'_j
    flipped = [c[j] < 0 for j in range(n)]
    if any(flipped[j] and u[j] is None for j in range(n)):
        raise ValueError("negative cost requires a finite upper bound")
    offset = Fraction(0)
    for j in range(n):
        if flipped[j]:
            offset += c[j] * u[j]
            c[j] = -c[j]
            for i in range(m):
                if A[i][j]:
                    b[i] -= A[i][j] * u[j]
                    A[i][j] = -A[i][j]

    if m == 0:
        x = [u[j] if flipped[j] else Fraction(0) for j in range(n)]
        z = [-Fraction(objective[j]) if flipped[j] else Fraction(0) for j in range(n)]
        sol = LPSolution(offset, tuple(x), (), tuple(z), 0)
        if not check_certificate(rows, rhs, objective, bounds, sol):
            raise AssertionError("trivial LP failed the strong duality check")
        return sol

    bounded = [j for j in range(n) if u[j] is not None]
    nz = len(bounded)
    # columns: y_0..y_{m-1}, z for bounded vars, slacks s_0..s_{n-1}, rhs
    ncol = m + nz + n
    scale_c = lcm(_denominator_lcm(v for r in A for v in r), _denominator_lcm(c))
    scale_o = lcm(_denominator_lcm(b), _denominator_lcm(u[j] for j in bounded))
    T = np.zeros((n + 1, ncol + 1), dtype=object)
    for j in range(n):
        for i in range(m):
            T[j, i] = int(A[i][j] * scale_c)
        T[j, m + nz + j] = 1
        T[j, ncol] = int(c[j] * scale_c)
    for k, j in enumerate(bounded):
        T[j, m + k] = -scale_c
    # each constraint row was multiplied by scale_c; the slack absorbs the factor
    obj = n
    for i in range(m):
        T[obj, i] = -int(b[i] * scale_o)
    for k, j in enumerate(bounded):
        T[obj, m + k] = int(u[j] * scale_o)
    basis = [m + nz + j for j in range(n)]
    d = 1
    pivots = 0
    while True:
        enter = -1
        for k in range(ncol):
            if T[obj, k] < 0:
                enter = k
                break
        if enter < 0:
            break
        leave = -1
        for i in range(n):
            a = T[i, enter]
            if a > 0:
                if leave < 0:
                    leave = i
                    continue
                # compare T[i,rhs]/a with T[leave,rhs]/T[leave,enter]
                lhs = T[i, ncol] * T[leave, enter]
                cur = T[leave, ncol] * a
                if lhs < cur or (lhs == cur and basis[i] < basis[leave]):
                    leave = i
        if leave < 0:
            raise Infeasible("dual is unbounded, so the covering constraints cannot be met")
        p = T[leave, enter]
        col = T[:, enter].copy()
        prow = T[leave].copy()
        T = (T * p - np.outer(col, prow)) // d
        T[leave] = prow
        d = p
        basis[leave] = enter
        pivots += 1

    dual_vals = [Fraction(0)] * (m + nz)
    for i, var in enumerate(basis):
        if var < m + nz:
            dual_vals[var] = Fraction(int(T[i, ncol]), int(d))
    y = dual_vals[:m]
    xs = [Fraction(int(T[obj, m + nz + j]), int(d)) * scale_c / scale_o for j in range(n)]

    # undo the complementation
    x = [u[j] - xs[j] if flipped[j] else xs[j] for j in range(n)]
    value = sum(Fraction(objective[j]) * x[j] for j in range(n))
    # the best bound multipliers for this y; valid for complemented columns too
    z = [Fraction(0)] * n
    for j in bounded:
        slack = sum(Fraction(rows[i][j]) * y[i] for i in range(m) if rows[i][j]) - Fraction(objective[j])
        if slack > 0:
            z[j] = slack
    sol = LPSolution(value, tuple(x), tuple(y), tuple(z), pivots)
    if not check_certificate(rows, rhs, objective, bounds, sol):
        raise AssertionError("simplex returned a pair that fails the strong duality check")
    return sol
