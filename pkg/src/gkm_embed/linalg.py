"""Rank of sparse linear systems over Q and over prime fields F_p.

Rows are dicts ``{column: coefficient}``.  Exact elimination works on
Fractions; modular elimination reduces integer (or Fraction) coefficients
mod p and runs either a sparse heap-driven elimination or a dense numpy
elimination, whichever fits the instance better.
"""
from __future__ import annotations

import heapq
import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np
from sympy import isprime

from .errors import InvariantError

Row = Mapping[int, object]

# dense numpy elimination is used when rows*cols stays below this many entries
DENSE_LIMIT = 12_000_000


def random_prime(rng: random.Random, lo: int = 2**30, hi: int = 2**31) -> int:
    while True:
        p = rng.randrange(lo | 1, hi, 2)
        if isprime(p):
            return p


def _reduce_row(row: dict, pivots: dict, mod: int | None) -> dict:
    """Eliminate every pivot column from ``row`` (pivot rows have leading entry 1)."""
    heap = list(row)
    heapq.heapify(heap)
    while heap:
        c = heapq.heappop(heap)
        v = row.get(c)
        if not v:
            continue
        piv = pivots.get(c)
        if piv is None:
            continue
        del row[c]
        for cc, pv in piv.items():
            if cc == c:
                continue
            old = row.get(cc)
            nv = (0 if old is None else old) - v * pv
            if mod is not None:
                nv %= mod
            if nv:
                if old is None:
                    heapq.heappush(heap, cc)
                row[cc] = nv
            elif old is not None:
                del row[cc]
    return row


def _sparse_rank(rows: Iterable[Row], mod: int | None) -> int:
    pivots: dict[int, dict] = {}
    # short rows first keeps fill-in down
    for src in sorted(rows, key=len):
        if mod is None:
            row = {c: Fraction(v) for c, v in src.items() if v}
        else:
            row = {}
            for c, v in src.items():
                v = _mod(v, mod)
                if v:
                    row[c] = v
        row = _reduce_row(row, pivots, mod)
        if not row:
            continue
        lead = min(row)
        lv = row[lead]
        if mod is None:
            pivots[lead] = {c: v / lv for c, v in row.items()}
        else:
            inv = pow(lv, mod - 2, mod)
            pivots[lead] = {c: v * inv % mod for c, v in row.items()}
    return len(pivots)


def _mod(v, p: int) -> int:
    if isinstance(v, Fraction):
        if v.denominator % p == 0:
            raise ZeroDivisionError(f"denominator {v.denominator} vanishes mod {p}")
        return v.numerator * pow(v.denominator, p - 2, p) % p
    return int(v) % p


def _dense_rank_modp(rows: Sequence[Row], ncols: int, p: int) -> int:
    A = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, v in row.items():
            A[i, c] = _mod(v, p)
    m, n = A.shape
    rank = 0
    for c in range(n):
        if rank == m:
            break
        nz = np.flatnonzero(A[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv], c:] = A[[piv, rank], c:]
        inv = pow(int(A[rank, c]), p - 2, p)
        prow = A[rank, c:] * inv % p
        A[rank, c:] = prow
        below = rank + 1 + np.flatnonzero(A[rank + 1 :, c])
        if below.size:
            f = A[below, c][:, None]
            A[below, c:] = (A[below, c:] - f * prow) % p
        rank += 1
    return rank


def rank_modp(rows: Sequence[Row], ncols: int, p: int, method: str = "auto") -> int:
    if p >= 2**31:
        raise ValueError("modulus must stay below 2**31 so products fit in int64")
    if method == "auto":
        method = "dense" if len(rows) * ncols <= DENSE_LIMIT else "sparse"
    if method == "dense":
        return _dense_rank_modp(rows, ncols, p)
    return _sparse_rank(rows, p)


def rank_rational(rows: Sequence[Row]) -> int:
    return _sparse_rank(rows, None)


def rank_exact(matrix: Sequence[Sequence]) -> int:
    """Rank over Q of a small dense matrix given as nested sequences."""
    return rank_rational([{j: v for j, v in enumerate(r) if v} for r in matrix])


def nullity(rows: Sequence[Row], ncols: int, mode: str = "exact", seed: int = 0, retries: int = 3) -> tuple[int, dict]:
    """Dimension of the solution space of ``rows . x = 0``.

    ``mode="modular"`` computes the rank modulo two random primes drawn from
    ``seed``; disagreement triggers fresh primes, and persistent disagreement
    falls back to exact arithmetic.  Returns ``(nullity, info)``.
    """
    if mode == "exact":
        return ncols - rank_rational(rows), {"mode": "exact"}
    if mode != "modular":
        raise ValueError(f"unknown arithmetic mode {mode!r}")
    rng = random.Random(seed)
    tried = []
    for _ in range(retries):
        p1 = random_prime(rng)
        p2 = random_prime(rng)
        while p2 == p1:
            p2 = random_prime(rng)
        r1 = rank_modp(rows, ncols, p1)
        r2 = rank_modp(rows, ncols, p2)
        tried.append((p1, r1, p2, r2))
        if r1 == r2:
            return ncols - r1, {"mode": "modular", "primes": [p1, p2], "probabilistic": True}
    r = rank_rational(rows)
    return ncols - r, {"mode": "exact", "escalated_from": tried}


def check_modulus_safe(p: int, group_order: int) -> None:
    if group_order % p == 0:
        raise InvariantError(f"prime {p} divides the group order {group_order}")


def nullspace_rational(rows: Sequence[Row], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of {x : rows . x = 0} over Q, one sparse vector per free column."""
    pivots: dict[int, dict] = {}
    for src in sorted(rows, key=len):
        row = _reduce_row({c: Fraction(v) for c, v in src.items() if v}, pivots, None)
        if row:
            lead = min(row)
            lv = row[lead]
            pivots[lead] = {c: v / lv for c, v in row.items()}
    # back-substitute so every pivot row is free of the other pivot columns
    done: dict[int, dict] = {}
    for lead in sorted(pivots, reverse=True):
        row = dict(pivots[lead])
        del row[lead]
        row = _reduce_row(row, done, None)
        row[lead] = Fraction(1)
        done[lead] = row
    basis = []
    for f in range(ncols):
        if f in done:
            continue
        vec = {f: Fraction(1)}
        for lead, row in done.items():
            v = row.get(f)
            if v:
                vec[lead] = -v
        basis.append(vec)
    return basis
