import json
import re

import pytest
from hypothesis import given, strategies as st

from conftest import built
from gkm_embed.errors import InputError
from gkm_embed.gkm import (
    apply_group_element,
    build_toric_gkm,
    embedding_dimension,
    export,
    from_json,
    normalize_graph,
)
from gkm_embed.polytope import edges, orbit_polytope
from gkm_embed.renner import normalize_sign
from gkm_embed.rootlat import build_root_system

CENSUS = {
    "rook2": (4, {1: 2, 2: 2, 3: 2}, 3),
    "rook3": (9, {1: 9, 2: 9, 3: 18}, 8),
    "hexagon": (36, {1: 54, 2: 54, 3: 36}, 8),
    "b2octagon": (64, {1: 128, 2: 128, 3: 64}, 10),
}


@pytest.mark.parametrize("name", sorted(CENSUS))
def test_census_and_degree_regularity(name):
    nv, kinds, dim = CENSUS[name]
    g = built(name)[2]
    assert len(g.vertices) == nv
    assert g.kind_counts() == kinds
    assert g.meta["dim"] == dim and g.meta["rationally_smooth"]
    assert set(g.degrees()) == {dim}


def test_octahedron_not_rationally_smooth_and_irregular():
    g = built("octahedron")[2]
    assert not g.meta["rationally_smooth"]
    assert g.meta["dim"] == 15
    # kind-1/2 contribute 2 * 4 moved reflections; the polytope degree is 4
    assert set(g.degrees()) != {15}


@pytest.mark.parametrize("name", ["rook2", "rook3", "hexagon", "octahedron", "b2square", "c2diamond", "b2octagon"])
def test_edge_characters(name):
    g = built(name)[2]
    r = g.rank
    for e in g.edges:
        assert any(e.char) and normalize_sign(e.char) == e.char
        pa, pb = g.vertices[e.a], g.vertices[e.b]
        if e.kind == 1:
            assert not any(e.char[r:]) and pa.orbit == pb.orbit and pa.right == pb.right
        if e.kind == 2:
            assert not any(e.char[:r]) and pa.orbit == pb.orbit and pa.left == pb.left
        if e.kind == 3:
            assert pa.left != pb.left and pa.right != pb.right


@pytest.mark.parametrize("name", ["rook2", "rook3", "hexagon", "b2square"])
def test_kind3_characters_vanish_on_a_twisted_diagonal(name):
    # some u with lambda(act(u, t)) + rho(t) = 0 for all t, i.e. M_u^T lambda = -rho
    vs, _, g, _ = built(name)
    r = g.rank
    mats = [w.matrix for w in vs.W]
    for e in g.edges:
        if e.kind == 3:
            lam, rho = e.char[:r], e.char[r:]
            assert any(tuple(int(x) for x in M.T @ lam) == tuple(-y for y in rho) for M in mats)


def test_toric_graphs():
    vs, pe, _, y = built("rook2")
    assert len(y.vertices) == 2 and len(y.edges) == 1
    assert y.edges[0].char == (1, -1, -1, 1)
    for name, n in [("rook3", 3), ("hexagon", 6)]:
        y = built(name)[3]
        assert len(y.vertices) == n and len(y.edges) == n
        for e in y.edges:
            r = y.rank
            assert e.char[r:] == tuple(-x for x in e.char[:r])


def test_toric_diag_action():
    vs, _, _, y = built("hexagon")
    for w in range(len(vs.W)):
        vp, ep = apply_group_element((w, w), y)
        assert sorted(vp) == list(range(6)) and sorted(ep) == list(range(6))


def test_point_toric_graph_exports():
    vs = orbit_polytope(build_root_system("A", 1), [(1, 1)])
    y = build_toric_gkm(vs, edges(vs))
    data = json.loads(export(y, "json"))
    assert len(data["vertices"]) == 1 and data["edges"] == []


def test_apply_group_element_examples():
    vs, _, g, _ = built("rook2")
    W = vs.W
    e, s = W.identity, W.generators[0]
    assert apply_group_element((e, e), g) == (list(range(4)), list(range(6)))
    vp, _ = apply_group_element((s, e), g)

    def name(i):
        ids = vs.orbit_vertices[0]
        fp = g.vertices[i]
        return vs.vertices[ids[fp.left]].index(1) + 1, vs.vertices[ids[fp.right]].index(1) + 1

    moved = {name(i): name(vp[i]) for i in range(4)}
    assert moved == {(1, 1): (2, 1), (2, 1): (1, 1), (1, 2): (2, 2), (2, 2): (1, 2)}


@pytest.mark.parametrize("name", ["rook3", "hexagon", "b2square", "octahedron"])
def test_generator_automorphisms(name):
    vs, _, g, _ = built(name)
    W = vs.W
    e = W.identity
    for s in W.generators:
        for pair in ((s, e), (e, s), (s, s)):
            vp, ep = apply_group_element(pair, g)
            assert len(set(vp)) == len(vp) and len(set(ep)) == len(ep)


@given(st.integers(0, 5), st.integers(0, 5))
def test_group_element_then_inverse_is_identity(w1, w2):
    vs, _, g, _ = built("hexagon")
    W = vs.W
    vp, ep = apply_group_element((w1, w2), g)
    vq, eq = apply_group_element((W.inv[w1], W.inv[w2]), g)
    assert [vq[i] for i in vp] == list(range(len(vp)))
    assert [eq[i] for i in ep] == list(range(len(ep)))


def test_normalization_idempotent():
    g = built("hexagon")[2]
    once = normalize_graph(g)
    assert normalize_graph(once).edges == once.edges == g.edges


def test_json_export_roundtrip_and_stability():
    g = built("rook2")[2]
    raw = export(g, "json")
    assert raw == export(g, "json")
    data = json.loads(raw)
    assert len(data["vertices"]) == 4 and len(data["edges"]) == 6
    assert data["meta"] == {"quasi_regular": True, "rationally_smooth": True, "dim": 3}
    back = from_json(raw)
    assert back.vertices == g.vertices and back.edges == g.edges


def test_dot_export_counts():
    g = built("hexagon")[2]
    dot = export(g, "dot").decode()
    assert len(re.findall(r"^\s*v\d+ \[label=", dot, re.M)) == 36
    labels = re.findall(r'^\s*v\d+ -- v\d+ \[label="k(\d) \(([-\d,]+)\)"\]', dot, re.M)
    assert len(labels) == 144
    assert sorted(int(k) for k, _ in labels) == sorted(e.kind for e in g.edges)


def test_unknown_export_format():
    with pytest.raises(InputError):
        export(built("rook2")[2], "xml")


def test_embedding_dimension():
    assert embedding_dimension(built("rook3")[0]) == 8
    assert embedding_dimension(built("b2square")[0]) == 10
