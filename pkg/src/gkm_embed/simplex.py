"""Exact two-phase simplex over the rationals (Bland's rule).

Only meant for the tiny programs the polytope module produces: a few dozen
columns, at most ambient-rank + 1 rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    x: list[Fraction] | None = None


def _pivot(T, basis, row, col):
    piv = T[row][col]
    T[row] = [v / piv for v in T[row]]
    for i, r in enumerate(T):
        if i != row and r[col] != 0:
            f = r[col]
            T[i] = [a - f * b for a, b in zip(r, T[row])]
    basis[row] = col


def _run(T, basis, cost, allowed):
    """Maximize cost . x on tableau T (last column = rhs) using Bland's rule."""
    m = len(T)
    while True:
        # reduced costs: c_j - c_B . column_j
        enter = None
        for j in allowed:
            if j in basis:
                continue
            rc = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m))
            if rc > 0:
                enter = j
                break
        if enter is None:
            return "optimal"
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(T, basis, best[1], enter)


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """max c.x  subject to  A x = b, x >= 0, all data exact."""
    m = len(A)
    n = len(c)
    T = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(row + art + [rhs])
    basis = [n + i for i in range(m)]
    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    _run(T, basis, phase1, range(n + m))
    if sum(T[i][-1] for i in range(m) if basis[i] >= n) != 0:
        return LPResult("infeasible")
    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, col)
        i += 1
    T = [r[:n] + [r[-1]] for r in T]
    cost = [Fraction(v) for v in c]
    status = _run(T, basis, cost, range(n))
    if status != "optimal":
        return LPResult(status)
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return LPResult("optimal", sum(ci * xi for ci, xi in zip(cost, x)), x)


def feasible(A: Sequence[Sequence], b: Sequence) -> bool:
    return maximize([0] * len(A[0]) if A else [], A, b).status == "optimal"
