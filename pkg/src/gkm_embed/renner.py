"""Rank-one and rank-two Renner combinatorics read off the orbit polytope.

Fixed points of T x T on the embedding are the rank-one Renner elements
u e v^{-1}; for e in Lambda_1 with vertex mu they are recorded as a pair of
polytope vertices (act(u, mu), act(v, mu)) in the same W-orbit, i.e. as a
pair of cosets in W/C_W(e).  Rank-two elements f u give the curves that
leave the closed orbits; they are enumerated from polytope edges f and
translations u in W.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .errors import InvariantError
from .polytope import PolyEdge, VertexSet
from .rootlat import Vector, WeylGroup

CONVENTIONS = ("action", "paper")


def normalize_sign(chi: Sequence[int]) -> Vector:
    """Scale by -1 if needed so the first nonzero entry is positive."""
    chi = tuple(int(x) for x in chi)
    for x in chi:
        if x:
            return chi if x > 0 else tuple(-y for y in chi)
    return chi


@dataclass(frozen=True, order=True)
class FixedPoint:
    orbit: int
    left: int  # coset id in W/C_W(e) == position inside the orbit
    right: int


@dataclass(frozen=True)
class Curve3Record:
    a: int  # fixed-point ids, a < b
    b: int
    theta: Vector  # length 2r, sign-normalized
    edge: int
    u: int  # W-index of the first translation generating the curve
    h_class: str


@dataclass(frozen=True)
class HClass:
    kind: str  # "one" | "two"
    root: Vector | None = None

    @property
    def two(self) -> bool:
        return self.kind == "two"


def lambda1(vs: VertexSet) -> list[tuple[int, Vector]]:
    """(orbit id, representative vertex) for each closed orbit."""
    return [(o, vs.vertices[v]) for o, v in enumerate(vs.representative)]


class FixedPointIndex:
    """Deterministic ids for R_1: orbit-major, then left coset, then right coset."""

    def __init__(self, vs: VertexSet):
        self.vs = vs
        self.points: list[FixedPoint] = []
        self.offsets = []
        for o, ids in enumerate(vs.orbit_vertices):
            self.offsets.append(len(self.points))
            k = len(ids)
            self.points.extend(FixedPoint(o, a, b) for a in range(k) for b in range(k))
        self._id = {fp: i for i, fp in enumerate(self.points)}

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def id(self, fp: FixedPoint) -> int:
        return self._id[fp]

    def from_vertices(self, left_vertex: int, right_vertex: int) -> int:
        """Fixed point whose left/right idempotents are the given polytope vertices."""
        vs = self.vs
        o = vs.orbit[left_vertex]
        if vs.orbit[right_vertex] != o:
            raise InvariantError("left and right vertices lie in different orbits", {"l": left_vertex, "r": right_vertex})
        k = len(vs.orbit_vertices[o])
        return self.offsets[o] + vs.coset[left_vertex] * k + vs.coset[right_vertex]

    def vertices_of(self, i: int) -> tuple[int, int]:
        fp = self.points[i]
        ids = self.vs.orbit_vertices[fp.orbit]
        return ids[fp.left], ids[fp.right]


def fixed_points(vs: VertexSet) -> FixedPointIndex:
    return FixedPointIndex(vs)


def _proportional(a: Sequence[int], b: Sequence[int]) -> bool:
    """a and b span the same rational line (both nonzero)."""
    ratio = None
    for x, y in zip(a, b):
        if (x == 0) != (y == 0):
            return False
        if x:
            q = Fraction(x, y)
            if ratio is None:
                ratio = q
            elif q != ratio:
                return False
    return ratio is not None


def h_class(vs: VertexSet, edge: PolyEdge) -> HClass:
    """Two-element H-class iff a root along the edge reflects one endpoint to the other."""
    W = vs.W
    found = None
    for alpha, w in W.reflections.items():
        if _proportional(alpha, edge.direction) and vs.action[w, edge.v1] == edge.v2:
            found = alpha
            break
    same_orbit = vs.orbit[edge.v1] == vs.orbit[edge.v2]
    if found is not None:
        if not same_orbit:
            raise InvariantError("swapping root between different orbits", {"edge": edge})
        return HClass("two", found)
    if same_orbit:
        raise InvariantError(
            "edge endpoints are W-conjugate but no root reflection swaps them",
            {"edge": (edge.v1, edge.v2), "direction": edge.direction},
        )
    return HClass("one")


def annotate_edges(vs: VertexSet, poly_edges: Sequence[PolyEdge]) -> list[PolyEdge]:
    out = []
    for e in poly_edges:
        h = h_class(vs, e)
        out.append(replace(e, h_class=h.kind, root=h.root))
    return out


def curve_character(vs: VertexSet, edge: PolyEdge, u: int, convention: str = "action") -> Vector:
    """theta = (lambda_f, -+ act(u^{-1}, lambda_f)), before sign normalization."""
    lam = edge.direction
    rho = vs.W.act(vs.W.inv[u], lam)
    if convention == "action":
        rho = tuple(-x for x in rho)
    elif convention != "paper":
        raise ValueError(f"unknown character convention {convention!r}")
    return tuple(lam) + tuple(rho)


def type3_curves(
    vs: VertexSet,
    poly_edges: Sequence[PolyEdge],
    fps: FixedPointIndex | None = None,
    convention: str = "action",
) -> list[Curve3Record]:
    """Curves through rank-two Renner elements f u, deduplicated by fixed-point pair."""
    if fps is None:
        fps = fixed_points(vs)
    W = vs.W
    seen: dict[tuple[int, int], Curve3Record] = {}
    for e in poly_edges:
        hc = e.h_class or h_class(vs, e).kind
        for u in range(len(W)):
            uinv = W.inv[u]
            a = fps.from_vertices(e.v1, int(vs.action[uinv, e.v1]))
            b = fps.from_vertices(e.v2, int(vs.action[uinv, e.v2]))
            if a == b:
                raise InvariantError("type-3 curve with coincident endpoints", {"edge": e.id, "u": u})
            key = (min(a, b), max(a, b))
            theta = normalize_sign(curve_character(vs, e, u, convention))
            prev = seen.get(key)
            if prev is None:
                seen[key] = Curve3Record(key[0], key[1], theta, e.id, u, hc)
            elif prev.theta != theta or prev.edge != e.id:
                raise InvariantError(
                    "duplicate type-3 generators disagree",
                    {"pair": key, "first": prev, "edge": e.id, "u": u, "theta": theta},
                )
    return sorted(seen.values(), key=lambda c: (c.a, c.b))


def translate_character(theta: Sequence[int], W: WeylGroup, w: int, side: str) -> Vector:
    """Character of the curve x w (side="right") or w x (side="left") from that of x."""
    r = len(theta) // 2
    lam, rho = tuple(theta[:r]), tuple(theta[r:])
    if side == "right":
        return lam + W.act(W.inv[w], rho)
    if side == "left":
        return W.act(w, lam) + rho
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


@dataclass(frozen=True)
class QuasiRegularity:
    stabilizers_trivial: bool
    r1: int
    e1: int
    w_order: int

    @property
    def verdict(self) -> bool:
        return self.stabilizers_trivial


def quasi_regularity(vs: VertexSet, fps: FixedPointIndex | None = None) -> QuasiRegularity:
    if fps is None:
        fps = fixed_points(vs)
    trivial = all(len(s) == 1 for s in vs.stabilizers)
    q = QuasiRegularity(trivial, len(fps), len(vs), len(vs.W))
    counting = q.r1 == q.e1 * q.w_order
    if counting != trivial:
        raise InvariantError("quasi-regularity criteria disagree", {"stabilizers_trivial": trivial, "R1": q.r1, "E1": q.e1, "W": q.w_order})
    return q


def is_quasi_regular(vs: VertexSet, fps: FixedPointIndex | None = None) -> bool:
    return quasi_regularity(vs, fps).verdict


def census_identities(vs: VertexSet, fps: FixedPointIndex) -> None:
    """|R_1| = sum |W/C_W(e)|^2 and |E_1| = sum |W/C_W(e)| over Lambda_1."""
    nW = len(vs.W)
    idx = [nW // len(s) for s in vs.stabilizers]
    if sum(k * k for k in idx) != len(fps) or sum(idx) != len(vs):
        raise InvariantError("fixed-point census identity failed", {"indices": idx, "R1": len(fps), "E1": len(vs)})


@dataclass(frozen=True)
class LJ:
    orbit: int
    vertex: int
    edges: tuple[int, ...]  # polytope edge ids containing the representative vertex
    J: tuple[int, ...]  # simple reflections fixing the representative


def l_j_set(vs: VertexSet, poly_edges: Sequence[PolyEdge]) -> list[LJ]:
    out = []
    for o, v in enumerate(vs.representative):
        inc = tuple(e.id for e in poly_edges if v in (e.v1, e.v2))
        J = tuple(i for i, g in enumerate(vs.W.generators) if vs.action[g, v] == v)
        out.append(LJ(o, v, inc, J))
    return out


def stabilizer_orbit_size(vs: VertexSet, v: int, other: int) -> int:
    """|Stab(v) . other|, the number of kind-3 curves at a fixed point over edge {v, other}."""
    stab = vs.vertex_stabilizer(v)
    return len({int(vs.action[w, other]) for w in stab})


def h_partners(vs: VertexSet, poly_edges: Sequence[PolyEdge], curves: Sequence[Curve3Record], fps: FixedPointIndex) -> list[tuple[Curve3Record, Curve3Record]]:
    """Pairs (x, s_alpha x) over curves from two-element edges, found by moving the left endpoints."""
    by_pair = {(c.a, c.b): c for c in curves}
    W = vs.W
    out = []
    for c in curves:
        e = poly_edges[c.edge]
        if e.h_class != "two":
            continue
        w = W.reflections[e.root]
        ends = []
        for i in (c.a, c.b):
            lv, rv = fps.vertices_of(i)
            ends.append(fps.from_vertices(int(vs.action[w, lv]), rv))
        y = by_pair.get((min(ends), max(ends)))
        if y is None:
            raise InvariantError("H-class partner curve missing", {"curve": c})
        out.append((c, y))
    return out
