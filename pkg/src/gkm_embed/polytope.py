"""Weyl-orbit polytopes: vertices model E_1 of the torus closure, edges model E_2.

A monoid is given by dominant weights at a common central height; the
vertex set is the union of their W-orbits.  Edges are certified by an exact
LP, and rational smoothness is decided by simplicity of the polytope.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from . import simplex
from .errors import InputError, InvariantError
from .linalg import rank_exact
from .rootlat import RootSystem, Vector, WeylGroup, cosets_and_stabilizers, enumerate_weyl


@dataclass
class VertexSet:
    rs: RootSystem
    W: WeylGroup = field(repr=False)
    vertices: list[Vector]
    orbit: list[int]  # orbit id per vertex
    coset: list[int]  # position of the vertex inside its orbit (= coset id in W/Stab)
    orbit_vertices: list[list[int]]  # global vertex ids per orbit, in coset order
    representative: list[int]  # global vertex id of the chosen Lambda_1 element per orbit
    stabilizers: list[list[int]]  # W-indices fixing the representative, per orbit
    action: np.ndarray = field(repr=False)  # action[w, v] = index of act(w, vertices[v])
    height: int | None = None
    chamber: str = "dominant"

    def __len__(self):
        return len(self.vertices)

    @property
    def n_orbits(self) -> int:
        return len(self.orbit_vertices)

    def index(self, point: Sequence[int]) -> int:
        return self._lookup[tuple(int(x) for x in point)]

    def __post_init__(self):
        self._lookup = {v: i for i, v in enumerate(self.vertices)}

    def vertex_stabilizer(self, v: int) -> list[int]:
        return [w for w in range(len(self.W)) if self.action[w, v] == v]


@dataclass(frozen=True)
class PolyEdge:
    id: int
    v1: int
    v2: int
    direction: Vector  # vertices[v1] - vertices[v2]
    h_class: str | None = None  # "one" | "two", filled in by renner.annotate_edges
    root: Vector | None = None  # swapping root alpha_f for two-element classes


def orbit_polytope(
    rs: RootSystem,
    dominant_weights: Sequence[Sequence[int]],
    W: WeylGroup | None = None,
    chamber: str = "dominant",
    check_heights: bool = True,
) -> VertexSet:
    """Union of the W-orbits of ``dominant_weights``, validated as a vertex set.

    ``chamber="antidominant"`` picks w0 * (dominant weight) as the orbit
    representative instead.  ``check_heights=False`` admits inputs that are
    not at a common central height (they are not monoid inputs, but the
    polytope combinatorics still make sense).
    """
    if W is None:
        W = enumerate_weyl(rs)
    if chamber not in ("dominant", "antidominant"):
        raise InputError(f"unknown chamber convention {chamber!r}")
    if not dominant_weights:
        raise InputError("at least one weight is required")
    weights = []
    for wt in dominant_weights:
        wt = tuple(int(x) for x in wt)
        if len(wt) != rs.ambient_rank:
            raise InputError(f"weight {wt} has length {len(wt)}, expected {rs.ambient_rank}")
        bad = rs.is_dominant(wt)
        if bad is not None:
            raise InputError(
                f"weight {wt} is not dominant: pairing with simple coroot {bad} "
                f"{rs.simple_coroots[bad]} is {rs.pairing(rs.simple_coroots[bad], wt)}"
            )
        if wt not in weights:
            weights.append(wt)
    height = None
    if check_heights:
        heights = {rs.height(wt) for wt in weights}
        if len(heights) != 1:
            raise InputError(f"weights are at mixed central heights {sorted(heights)}")
        height = heights.pop()
        if height <= 0:
            raise InputError(f"central height must be positive, got {height}")
        if all(x == 0 for x in weights[0]):
            raise InputError("the zero weight cannot be a vertex")

    w0 = max(range(len(W)), key=lambda i: W[i].length)
    vertices, orbit, coset, orbit_vertices, reps, stabs = [], [], [], [], [], []
    for o, wt in enumerate(weights):
        rep_pt = wt if chamber == "dominant" else W.act(w0, wt)
        stab, cosets = cosets_and_stabilizers(rs, W, rep_pt)
        ids = []
        for k, c in enumerate(cosets):
            if c.point in vertices:
                raise InputError(f"weights {weights[orbit[vertices.index(c.point)]]} and {wt} share an orbit")
            ids.append(len(vertices))
            vertices.append(c.point)
            orbit.append(o)
            coset.append(k)
        orbit_vertices.append(ids)
        reps.append(ids[0])
        stabs.append(stab)

    lookup = {v: i for i, v in enumerate(vertices)}
    action = np.empty((len(W), len(vertices)), dtype=np.int64)
    for w in range(len(W)):
        M = W[w].matrix
        for i, v in enumerate(vertices):
            action[w, i] = lookup[tuple(int(x) for x in M @ np.array(v))]
    vs = VertexSet(rs, W, vertices, orbit, coset, orbit_vertices, reps, stabs, action, height, chamber)

    # every orbit point must be a vertex of the hull; by symmetry one point per orbit suffices
    if len(vertices) > 1:
        for o, rep in enumerate(reps):
            if _in_hull_of_others(vertices, rep):
                raise InputError(f"orbit of {weights[o]} lies inside the hull of the other points")
    return vs


def _in_hull_of_others(vertices, i) -> bool:
    others = [v for k, v in enumerate(vertices) if k != i]
    r = len(vertices[0])
    A = [[v[c] for v in others] for c in range(r)] + [[1] * len(others)]
    b = list(vertices[i]) + [1]
    return simplex.feasible(A, b)


def edge_certificate(vertices: Sequence[Vector], i: int, j: int) -> bool:
    """True iff {v_i, v_j} is a 1-face of conv(vertices).

    Maximizes the mass placed outside {i, j} in a convex representation of
    the midpoint; the pair is an edge iff that maximum is zero.
    """
    r = len(vertices[0])
    n = len(vertices)
    A = [[2 * vertices[k][c] for k in range(n)] for c in range(r)] + [[1] * n]
    b = [vertices[i][c] + vertices[j][c] for c in range(r)] + [1]
    cost = [0 if k in (i, j) else 1 for k in range(n)]
    res = simplex.maximize(cost, A, b)
    if res.status != "optimal":
        raise InvariantError("edge LP did not reach an optimum", {"pair": (i, j), "status": res.status})
    return res.value == 0


def edges(vs: VertexSet) -> list[PolyEdge]:
    if len(vs) < 2:
        return []
    out = []
    for i, j in combinations(range(len(vs)), 2):
        if edge_certificate(vs.vertices, i, j):
            d = tuple(a - b for a, b in zip(vs.vertices[i], vs.vertices[j]))
            out.append(PolyEdge(len(out), i, j, d))
    return out


@dataclass(frozen=True)
class Simplicity:
    dim: int
    degrees: tuple[int, ...]
    is_simple: bool


def polytope_dimension(vs: VertexSet) -> int:
    if len(vs) < 2:
        return 0
    v0 = vs.vertices[0]
    diffs = [[a - b for a, b in zip(v, v0)] for v in vs.vertices[1:]]
    return rank_exact(diffs)


def simplicity_check(vs: VertexSet, poly_edges: Sequence[PolyEdge]) -> Simplicity:
    dim = polytope_dimension(vs)
    deg = [0] * len(vs)
    for e in poly_edges:
        deg[e.v1] += 1
        deg[e.v2] += 1
    if any(d < dim for d in deg):
        raise InvariantError("vertex degree below polytope dimension", {"dim": dim, "degrees": deg})
    return Simplicity(dim, tuple(deg), all(d == dim for d in deg))
