"""Moment graphs of the embedding X and of its toric part Y.

Edge kinds: 1 = curve inside a closed orbit moved by the left torus
(character (alpha, 0)), 2 = same on the right (character (0, alpha)),
3 = curve through a rank-two Renner element.  Characters are integer
vectors of length 2r, normalized so the first nonzero entry is positive.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InputError, InvariantError
from .polytope import PolyEdge, VertexSet, simplicity_check, polytope_dimension
from .renner import (
    FixedPoint,
    annotate_edges,
    census_identities,
    fixed_points,
    is_quasi_regular,
    normalize_sign,
    stabilizer_orbit_size,
    type3_curves,
)
from .rootlat import Vector


@dataclass(frozen=True)
class GKMEdge:
    kind: int
    a: int
    b: int
    char: Vector
    h_class: str | None = None


@dataclass
class GKMGraph:
    rank: int
    vertices: list[FixedPoint]
    edges: list[GKMEdge]
    meta: dict = field(default_factory=dict)
    vs: VertexSet | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.vertex_ids = {v: i for i, v in enumerate(self.vertices)}
        self.edge_ids = {(e.a, e.b): i for i, e in enumerate(self.edges)}

    @property
    def nvars(self) -> int:
        return 2 * self.rank

    def degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for e in self.edges:
            deg[e.a] += 1
            deg[e.b] += 1
        return deg

    def edge_between(self, a: int, b: int) -> int | None:
        return self.edge_ids.get((min(a, b), max(a, b)))

    def kind_counts(self) -> dict[int, int]:
        out = {1: 0, 2: 0, 3: 0}
        for e in self.edges:
            out[e.kind] += 1
        return out

    def with_edges(self, edges: Sequence[GKMEdge]) -> "GKMGraph":
        return GKMGraph(self.rank, list(self.vertices), list(edges), dict(self.meta), self.vs)


def _fingerprint(vs: VertexSet) -> str:
    h = hashlib.sha256(repr((vs.rs.family, vs.rs.rank, vs.rs.ambient_rank, vs.vertices)).encode())
    return h.hexdigest()[:16]


def embedding_dimension(vs: VertexSet) -> int:
    """dim X = dim G/Z = r - 1 + |Phi|."""
    return vs.rs.ambient_rank - 1 + len(vs.rs.roots)


def expected_degree(vs: VertexSet, poly_edges: Sequence[PolyEdge], v: int) -> int:
    """Degree of a fixed point whose left idempotent is vertex ``v``."""
    W = vs.W
    moved = sum(1 for w in W.reflections.values() if vs.action[w, v] != v)
    k3 = 0
    for e in poly_edges:
        if v in (e.v1, e.v2):
            other = e.v2 if e.v1 == v else e.v1
            k3 += stabilizer_orbit_size(vs, v, other)
    return 2 * moved + k3


def build_gkm(vs: VertexSet, poly_edges: Sequence[PolyEdge], convention: str = "action") -> GKMGraph:
    r = vs.rs.ambient_rank
    zero = (0,) * r
    W = vs.W
    if any(e.h_class is None for e in poly_edges):
        poly_edges = annotate_edges(vs, poly_edges)
    fps = fixed_points(vs)
    census_identities(vs, fps)
    found: dict[tuple[int, int], GKMEdge] = {}

    def add(kind, a, b, char, h=None):
        key = (min(a, b), max(a, b))
        e = GKMEdge(kind, key[0], key[1], normalize_sign(char), h)
        prev = found.get(key)
        if prev is None:
            found[key] = e
        elif prev != e:
            raise InvariantError("inconsistent duplicate edge generation", {"first": prev, "second": e})

    for i in range(len(fps)):
        lv, rv = fps.vertices_of(i)
        for alpha, w in W.reflections.items():
            lv2 = int(vs.action[w, lv])
            if lv2 != lv:
                add(1, i, fps.from_vertices(lv2, rv), tuple(alpha) + zero)
            rv2 = int(vs.action[w, rv])
            if rv2 != rv:
                add(2, i, fps.from_vertices(lv, rv2), zero + tuple(alpha))
    for c in type3_curves(vs, poly_edges, fps, convention):
        if (c.a, c.b) in found:
            raise InvariantError("type-3 curve duplicates a closed-orbit curve", {"curve": c})
        found[(c.a, c.b)] = GKMEdge(3, c.a, c.b, c.theta, c.h_class)

    simp = simplicity_check(vs, poly_edges)
    full = simp.dim == r - 1
    meta = {
        "dim": embedding_dimension(vs),
        "n_orbits": vs.n_orbits,
        "quasi_regular": is_quasi_regular(vs, fps),
        "rationally_smooth": simp.is_simple,
        "full_dimensional": full,
        "convention": convention,
        "toric": False,
        "source": _fingerprint(vs),
    }
    g = GKMGraph(r, list(fps.points), sorted(found.values(), key=lambda e: (e.kind, e.a, e.b)), meta, vs)
    _check_graph(g, vs, poly_edges, fps)
    return g


def _check_graph(g: GKMGraph, vs: VertexSet, poly_edges, fps) -> None:
    r = g.rank
    W = vs.W
    for e in g.edges:
        if not any(e.char):
            raise InvariantError("zero edge character", {"edge": e})
        if e.kind == 1 and any(e.char[r:]):
            raise InvariantError("kind-1 edge with nonzero right character", {"edge": e})
        if e.kind == 2 and any(e.char[:r]):
            raise InvariantError("kind-2 edge with nonzero left character", {"edge": e})
        pa, pb = g.vertices[e.a], g.vertices[e.b]
        if e.kind in (1, 2) and (pa.orbit != pb.orbit or (pa.right != pb.right if e.kind == 1 else pa.left != pb.left)):
            raise InvariantError("closed-orbit edge leaves its orbit closure", {"edge": e})
        if e.kind == 3 and g.meta["convention"] == "action":
            # character vanishes on the twisted diagonal {(act(u, t), t)}
            la, lb = fps.vertices_of(e.a)
            u = _translation(vs, la, lb, fps.vertices_of(e.b))
            M = W[u].matrix
            lam = np.array(e.char[:r])
            rho = np.array(e.char[r:])
            if np.any(M.T @ lam + rho):
                raise InvariantError("kind-3 character does not vanish on its twisted diagonal", {"edge": e, "u": u})
    deg = g.degrees()
    for i in range(len(g.vertices)):
        lv, _ = fps.vertices_of(i)
        want = expected_degree(vs, poly_edges, lv)
        if deg[i] != want:
            raise InvariantError("vertex degree differs from the local count", {"vertex": i, "degree": deg[i], "expected": want})
    if g.meta["rationally_smooth"] and g.meta["full_dimensional"]:
        bad = [i for i, d in enumerate(deg) if d != g.meta["dim"]]
        if bad:
            raise InvariantError("degree regularity fails on a rationally smooth input", {"vertices": bad[:10], "dim": g.meta["dim"]})


def _translation(vs: VertexSet, la: int, ra: int, b: tuple[int, int]) -> int:
    """Some u with act(u^{-1}) mapping both left vertices to their right partners."""
    lb, rb = b
    W = vs.W
    for u in range(len(W)):
        ui = W.inv[u]
        if vs.action[ui, la] == ra and vs.action[ui, lb] == rb:
            return u
    raise InvariantError("no translation explains a kind-3 curve", {"a": (la, ra), "b": b})


def build_toric_gkm(vs: VertexSet, poly_edges: Sequence[PolyEdge]) -> GKMGraph:
    """Moment graph of Y: polytope vertices, one edge per polytope edge, character (l, -l)."""
    if any(e.h_class is None for e in poly_edges):
        poly_edges = annotate_edges(vs, poly_edges)
    r = vs.rs.ambient_rank
    verts = [FixedPoint(vs.orbit[v], vs.coset[v], vs.coset[v]) for v in range(len(vs))]
    # vertex order follows FixedPoint order so ids agree with orbit-major enumeration
    order = sorted(range(len(vs)), key=lambda v: verts[v])
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for e in poly_edges:
        a, b = pos[e.v1], pos[e.v2]
        lam = tuple(e.direction)
        out.append(GKMEdge(3, min(a, b), max(a, b), normalize_sign(lam + tuple(-x for x in lam)), e.h_class))
    simp = simplicity_check(vs, poly_edges)
    meta = {
        "dim": simp.dim,
        "n_orbits": vs.n_orbits,
        "quasi_regular": None,
        "rationally_smooth": simp.is_simple,
        "full_dimensional": simp.dim == r - 1,
        "convention": "action",
        "toric": True,
        "source": _fingerprint(vs),
    }
    return GKMGraph(r, [verts[v] for v in order], sorted(out, key=lambda e: (e.a, e.b)), meta, vs)


def vertex_image(graph: GKMGraph, g: tuple[int, int], i: int) -> int:
    vs = graph.vs
    w1, w2 = g
    fp = graph.vertices[i]
    ids = vs.orbit_vertices[fp.orbit]
    lv = int(vs.action[w1, ids[fp.left]])
    rv = int(vs.action[w2, ids[fp.right]])
    img = FixedPoint(fp.orbit, vs.coset[lv], vs.coset[rv])
    j = graph.vertex_ids.get(img)
    if j is None:
        raise InvariantError("group element moves a vertex off the graph", {"vertex": i, "image": img, "g": g})
    return j


def character_image(graph: GKMGraph, g: tuple[int, int], char: Sequence[int]) -> Vector:
    W = graph.vs.W
    r = graph.rank
    return W.act(g[0], char[:r]) + W.act(g[1], char[r:])


def apply_group_element(g: tuple[int, int], graph: GKMGraph) -> tuple[list[int], list[int]]:
    """Vertex and edge permutations induced by (w1, w2) in W x W (indices into W)."""
    if graph.vs is None:
        raise InputError("graph has no polytope data attached")
    vperm = [vertex_image(graph, g, i) for i in range(len(graph.vertices))]
    eperm = []
    for k, e in enumerate(graph.edges):
        j = graph.edge_between(vperm[e.a], vperm[e.b])
        if j is None:
            raise InvariantError("image edge missing", {"edge": k, "g": g})
        if normalize_sign(character_image(graph, g, e.char)) != graph.edges[j].char:
            raise InvariantError("edge character not carried to image character", {"edge": k, "image": j, "g": g})
        eperm.append(j)
    if sorted(vperm) != list(range(len(vperm))) or sorted(eperm) != list(range(len(eperm))):
        raise InvariantError("induced map is not a permutation", {"g": g})
    return vperm, eperm


def normalize_graph(graph: GKMGraph) -> GKMGraph:
    return graph.with_edges([GKMEdge(e.kind, e.a, e.b, normalize_sign(e.char), e.h_class) for e in graph.edges])


def to_json_obj(graph: GKMGraph) -> dict:
    edges = []
    for e in graph.edges:
        rec = {"kind": e.kind, "a": e.a, "b": e.b, "char": list(e.char)}
        if e.h_class is not None:
            rec["h_class"] = e.h_class
        edges.append(rec)
    meta = {k: graph.meta.get(k) for k in ("quasi_regular", "rationally_smooth", "dim")}
    return {
        "rank": graph.rank,
        "vertices": [{"id": i, "orbit": v.orbit, "left": v.left, "right": v.right} for i, v in enumerate(graph.vertices)],
        "edges": edges,
        "meta": meta,
    }


def to_dot(graph: GKMGraph) -> str:
    lines = ["graph gkm {"]
    for i, v in enumerate(graph.vertices):
        lines.append(f'  v{i} [label="{v.orbit}:{v.left}:{v.right}"];')
    for e in graph.edges:
        ch = ",".join(str(x) for x in e.char)
        lines.append(f'  v{e.a} -- v{e.b} [label="k{e.kind} ({ch})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(graph: GKMGraph, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(to_json_obj(graph), separators=(",", ":")) + "\n").encode()
    if fmt == "dot":
        return to_dot(graph).encode()
    raise InputError(f"unknown export format {fmt!r}")


def from_json(data: bytes | str | dict) -> GKMGraph:
    if not isinstance(data, dict):
        data = json.loads(data)
    verts = [FixedPoint(v["orbit"], v["left"], v["right"]) for v in sorted(data["vertices"], key=lambda v: v["id"])]
    edges = [GKMEdge(e["kind"], e["a"], e["b"], tuple(e["char"]), e.get("h_class")) for e in data["edges"]]
    return GKMGraph(data["rank"], verts, edges, dict(data.get("meta", {})))
