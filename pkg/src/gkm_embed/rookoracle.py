"""Brute-force moment graph of the rook monoid, straight from partial permutation matrices.

Nothing here goes through polytopes or Weyl cosets.  The rank-one elements
E_ij are the fixed points; any two of them span a T x T-stable line in the
space of matrices, and its character is the difference of the entry weights.
Under (s, t) . x = s x t^{-1} the entry (i, j) has weight (e_i, -e_j).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import ConfigError
from .gkm import GKMEdge, GKMGraph
from .renner import FixedPoint

MAX_N = 4


@dataclass(frozen=True)
class RookElement:
    n: int
    cells: frozenset  # {(row, col)} positions of the ones

    @property
    def rank(self) -> int:
        return len(self.cells)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int((i, j) in self.cells) for j in range(self.n)) for i in range(self.n))

    def __mul__(self, other: "RookElement") -> "RookElement":
        right = dict(other.cells)  # row -> col
        return RookElement(self.n, frozenset((i, right[k]) for i, k in self.cells if k in right))

    def is_idempotent(self) -> bool:
        return self * self == self


def rook_monoid(n: int) -> list[RookElement]:
    if not 1 <= n <= MAX_N:
        raise ConfigError(f"rook oracle supports 1 <= n <= {MAX_N}, got {n}")
    out = []
    for k in range(n + 1):
        for rows in combinations(range(n), k):
            for cols in permutations(range(n), k):
                out.append(RookElement(n, frozenset(zip(rows, cols))))
    return sorted(out, key=lambda x: (x.rank, sorted(x.cells)))


def _weight(i: int, j: int, n: int, convention: str) -> tuple[int, ...]:
    w = [0] * (2 * n)
    w[i] += 1
    w[n + j] += -1 if convention == "action" else 1
    return tuple(w)


def _sign_normalized(v):
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def oracle_gkm(n: int, convention: str = "action") -> GKMGraph:
    """Vertices E_ij (stored as FixedPoint(0, i, j)); an edge for every pair."""
    if convention not in ("action", "paper"):
        raise ConfigError(f"unknown convention {convention!r}")
    rank1 = [x for x in rook_monoid(n) if x.rank == 1]
    cells = [next(iter(x.cells)) for x in rank1]
    verts = [FixedPoint(0, i, j) for i, j in cells]
    edges = []
    for a, b in combinations(range(len(cells)), 2):
        (i, j), (k, l) = cells[a], cells[b]
        wa, wb = _weight(i, j, n, convention), _weight(k, l, n, convention)
        char = _sign_normalized(tuple(x - y for x, y in zip(wa, wb)))
        kind = 1 if j == l else 2 if i == k else 3
        edges.append(GKMEdge(kind, a, b, char, "two" if kind == 3 else None))
    meta = {"dim": n * n - 1, "n_orbits": 1, "quasi_regular": n <= 2, "rationally_smooth": True,
            "convention": convention, "toric": False, "source": f"rook-oracle-{n}"}
    return GKMGraph(n, verts, edges, meta)


@dataclass
class MatchReport:
    ok: bool
    discrepancies: list[str]


def compare(oracle: GKMGraph, pipeline: GKMGraph) -> MatchReport:
    """Match E_ij with the pipeline vertex whose left/right idempotents are e_i/e_j."""
    problems = []
    n = oracle.rank
    vs = pipeline.vs
    if pipeline.rank != n or vs is None:
        return MatchReport(False, [f"pipeline rank {pipeline.rank} does not match oracle n = {n}"])

    def unit(point):
        if sorted(point) != [0] * (n - 1) + [1]:
            return None
        return list(point).index(1)

    to_pipe = {}
    for pid, fp in enumerate(pipeline.vertices):
        ids = vs.orbit_vertices[fp.orbit]
        i, j = unit(vs.vertices[ids[fp.left]]), unit(vs.vertices[ids[fp.right]])
        if i is None or j is None:
            problems.append(f"pipeline vertex {pid} is not of the form (e_i, e_j)")
            continue
        to_pipe[(i, j)] = pid
    vmap = {}
    for oid, fp in enumerate(oracle.vertices):
        pid = to_pipe.get((fp.left, fp.right))
        if pid is None:
            problems.append(f"E_{fp.left + 1}{fp.right + 1} has no pipeline vertex")
        else:
            vmap[oid] = pid
    if len(vmap) != len(pipeline.vertices) or len(set(vmap.values())) != len(vmap):
        problems.append(f"vertex map is not a bijection ({len(vmap)} of {len(pipeline.vertices)})")

    def name(oid):
        fp = oracle.vertices[oid]
        return f"E_{fp.left + 1}{fp.right + 1}"

    seen = set()
    for e in oracle.edges:
        if e.a not in vmap or e.b not in vmap:
            continue
        k = pipeline.edge_between(vmap[e.a], vmap[e.b])
        if k is None:
            problems.append(f"edge {{{name(e.a)}, {name(e.b)}}} missing from pipeline")
            continue
        seen.add(k)
        pe = pipeline.edges[k]
        if pe.kind != e.kind:
            problems.append(f"edge {{{name(e.a)}, {name(e.b)}}}: kind {pe.kind} vs oracle {e.kind}")
        if tuple(pe.char) != tuple(e.char):
            problems.append(f"edge {{{name(e.a)}, {name(e.b)}}} (kind {e.kind}): character {pe.char} vs oracle {e.char}")
    for k in sorted(set(range(len(pipeline.edges))) - seen):
        problems.append(f"pipeline edge {k} has no oracle counterpart")
    return MatchReport(not problems, problems)
