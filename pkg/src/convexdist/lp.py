"""Dense exact-rational linear programming (two-phase simplex, Bland's rule).

Sized for the tiny LPs this package needs: Chebyshev-center inradius problems
(a handful of variables, tens of facet rows) and convex-combination
membership feasibility.  All arithmetic is in ``fractions.Fraction``, so
optimality and infeasibility verdicts are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: tuple[Q, ...] | None
    value: Q | None


def _pivot(rows: list[list[Q]], zrow: list[Q], basis: list[int], r: int, c: int) -> None:
    piv = rows[r][c]
    inv = 1 / piv
    rows[r] = [v * inv for v in rows[r]]
    prow = rows[r]
    for i, row in enumerate(rows):
        if i != r and row[c] != 0:
            f = row[c]
            rows[i] = [a - f * b for a, b in zip(row, prow)]
    if zrow[c] != 0:
        f = zrow[c]
        for j in range(len(zrow)):
            zrow[j] -= f * prow[j]
    basis[r] = c


def _run_simplex(rows: list[list[Q]], zrow: list[Q], basis: list[int]) -> str:
    ncols = len(zrow) - 1
    while True:
        enter = -1
        for j in range(ncols):
            if zrow[j] > 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best: Q | None = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return UNBOUNDED
        _pivot(rows, zrow, basis, leave, enter)


def solve_lp(
    objective: Sequence[Q],
    A_ub: Sequence[Sequence[Q]] = (),
    b_ub: Sequence[Q] = (),
    A_eq: Sequence[Sequence[Q]] = (),
    b_eq: Sequence[Q] = (),
    maximize: bool = True,
) -> LPResult:
    """Optimize objective . x subject to A_ub x <= b_ub, A_eq x = b_eq, x >= 0."""
    n = len(objective)
    obj = [Q(v) for v in objective]
    if not maximize:
        obj = [-v for v in obj]

    raw: list[tuple[list[Q], Q, str]] = []
    for row, b in zip(A_ub, b_ub):
        raw.append(([Q(v) for v in row], Q(b), "ub"))
    for row, b in zip(A_eq, b_eq):
        raw.append(([Q(v) for v in row], Q(b), "eq"))

    m = len(raw)
    n_slack = sum(1 for _, _, kind in raw if kind == "ub")
    # columns: structural | slack/surplus | artificial | rhs
    rows: list[list[Q]] = []
    basis: list[int] = []
    art_cols: list[int] = []
    slack_at = n
    art_at = n + n_slack
    si = 0
    ai = 0
    for coeffs, b, kind in raw:
        if b < 0:
            coeffs = [-v for v in coeffs]
            b = -b
            kind = {"ub": "lb", "eq": "eq"}[kind]
        row = coeffs + [Q(0)] * n_slack + [Q(0)] * m + [b]
        if kind == "ub":
            row[slack_at + si] = Q(1)
            basis.append(slack_at + si)
            si += 1
        elif kind == "lb":
            row[slack_at + si] = Q(-1)
            si += 1
            row[art_at + ai] = Q(1)
            basis.append(art_at + ai)
            art_cols.append(art_at + ai)
            ai += 1
        else:
            row[art_at + ai] = Q(1)
            basis.append(art_at + ai)
            art_cols.append(art_at + ai)
            ai += 1
        rows.append(row)

    ncols = n + n_slack + m

    if art_cols:
        zrow = [Q(0)] * (ncols + 1)
        for c in art_cols:
            zrow[c] = Q(-1)
        # price out initial artificial basis
        for i, bcol in enumerate(basis):
            if bcol in art_cols:
                for j in range(ncols + 1):
                    zrow[j] += rows[i][j]
        status = _run_simplex(rows, zrow, basis)
        if status != OPTIMAL or zrow[-1] != 0:
            return LPResult(INFEASIBLE, None, None)
        # pivot remaining artificials out of the basis where possible
        art_set = set(art_cols)
        for i in range(m):
            if basis[i] in art_set:
                piv_col = next(
                    (j for j in range(n + n_slack) if rows[i][j] != 0), None
                )
                if piv_col is not None:
                    _pivot(rows, zrow, basis, i, piv_col)

    zrow = [Q(0)] * (ncols + 1)
    for j in range(n):
        zrow[j] = obj[j]
    art_set = set(art_cols)
    for i, bcol in enumerate(basis):
        if zrow[bcol] != 0:
            f = zrow[bcol]
            for j in range(ncols + 1):
                zrow[j] -= f * rows[i][j]
    # forbid artificials from re-entering
    for j in art_set:
        zrow[j] = Q(-1)

    status = _run_simplex(rows, zrow, basis)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None)

    x = [Q(0)] * n
    for i, bcol in enumerate(basis):
        if bcol < n:
            x[bcol] = rows[i][-1]
        elif bcol in art_set and rows[i][-1] != 0:
            return LPResult(INFEASIBLE, None, None)
    value = sum(o * v for o, v in zip(obj, x))
    if not maximize:
        value = -value
    return LPResult(OPTIMAL, tuple(x), value)


def feasible_combination(
    A_eq: Sequence[Sequence[Q]], b_eq: Sequence[Q]
) -> tuple[Q, ...] | None:
    """Solve A_eq x = b_eq, x >= 0 exactly; return a solution or None."""
    n = len(A_eq[0]) if A_eq else 0
    res = solve_lp([Q(0)] * n, A_eq=A_eq, b_eq=b_eq)
    return res.x if res.status == OPTIMAL else None
