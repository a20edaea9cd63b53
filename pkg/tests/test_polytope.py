import math

import pytest
from hypothesis import given, strategies as st

from gkm_embed.errors import InputError
from gkm_embed.polytope import edge_certificate, edges, orbit_polytope, simplicity_check
from gkm_embed.rootlat import build_root_system


def poly(fam, n, weights, **kw):
    vs = orbit_polytope(build_root_system(fam, n), weights, **kw)
    return vs, edges(vs)


def test_rook_segment():
    vs, es = poly("A", 1, [(1, 0)])
    assert set(vs.vertices) == {(1, 0), (0, 1)}
    assert len(es) == 1 and es[0].direction in {(1, -1), (-1, 1)}


def test_triangle_and_hexagon():
    vs, es = poly("A", 2, [(1, 0, 0)])
    assert len(vs) == 3 and len(es) == 3
    s = simplicity_check(vs, es)
    assert s.is_simple and s.dim == 2

    vs, es = poly("A", 2, [(2, 1, 0)])
    assert len(vs) == 6 and len(es) == 6
    s = simplicity_check(vs, es)
    assert s.is_simple and s.dim == 2 and set(s.degrees) == {2}
    # boundary of the hexagon: consecutive points in angular order
    cx = [sum(v[i] for v in vs.vertices) / 6 for i in range(3)]
    ang = {}
    for k, v in enumerate(vs.vertices):
        x = (v[0] - cx[0]) - (v[1] - cx[1])
        y = ((v[0] - cx[0]) + (v[1] - cx[1]) - 2 * (v[2] - cx[2])) / math.sqrt(3)
        ang[k] = math.atan2(y, x)
    ring = sorted(ang, key=ang.get)
    want = {frozenset((ring[i], ring[(i + 1) % 6])) for i in range(6)}
    assert {frozenset((e.v1, e.v2)) for e in es} == want


def test_octahedron_is_hypersimplex():
    vs, es = poly("A", 3, [(1, 1, 0, 0)])
    assert len(vs) == 6 and len(es) == 12
    hamming2 = {
        frozenset((i, j))
        for i in range(6)
        for j in range(i + 1, 6)
        if sum(a != b for a, b in zip(vs.vertices[i], vs.vertices[j])) == 2
    }
    assert {frozenset((e.v1, e.v2)) for e in es} == hamming2
    s = simplicity_check(vs, es)
    assert s.dim == 3 and set(s.degrees) == {4} and not s.is_simple


def test_simplices_are_simple():
    for n in (1, 2, 3, 4):
        vs, es = poly("A", n, [(1,) + (0,) * n])
        assert len(es) == math.comb(n + 1, 2)
        assert simplicity_check(vs, es).is_simple


def test_b2_square_and_octagon():
    vs, es = poly("B", 2, [(1, 1, 1)])
    assert len(vs) == 4 and len(es) == 4
    vs, es = poly("B", 2, [(2, 1, 1)])
    assert len(vs) == 8 and len(es) == 8


def test_two_orbit_input():
    vs, es = poly("A", 1, [(1, 0), (2, 2)], check_heights=False)
    assert vs.n_orbits == 2 and len(vs) == 3 and len(es) == 3


def test_input_errors():
    rs = build_root_system("A", 2)
    with pytest.raises(InputError, match="coroot 0"):
        orbit_polytope(rs, [(0, 1, 0)])
    with pytest.raises(InputError, match="mixed"):
        orbit_polytope(rs, [(1, 0, 0), (1, 1, 0)])
    with pytest.raises(InputError, match="inside the hull"):
        # centroid of the hexagon orbit at the same height
        orbit_polytope(rs, [(2, 1, 0), (1, 1, 1)])
    with pytest.raises(InputError, match="length"):
        orbit_polytope(rs, [(1, 0)])


def test_antidominant_chamber_changes_only_representatives():
    rs = build_root_system("A", 2)
    a = orbit_polytope(rs, [(2, 1, 0)])
    b = orbit_polytope(rs, [(2, 1, 0)], chamber="antidominant")
    assert set(a.vertices) == set(b.vertices)
    assert b.vertices[b.representative[0]] == (0, 1, 2)


dominant_a2 = st.tuples(st.integers(0, 3), st.integers(0, 3)).map(lambda t: (t[0] + t[1], t[1], 0))
dominant_b2 = st.tuples(st.integers(0, 3), st.integers(1, 3)).map(lambda t: (t[0] + t[1], t[1], 1))


@given(st.one_of(dominant_a2.map(lambda w: ("A", 2, w)), dominant_b2.map(lambda w: ("B", 2, w))))
def test_edges_are_w_equivariant(case):
    fam, n, w = case
    if not any(w[:2]):
        return
    vs = orbit_polytope(build_root_system(fam, n), [w])
    es = edges(vs)
    pairs = {frozenset((e.v1, e.v2)) for e in es}
    for g in range(len(vs.W)):
        for e in es:
            a, b = int(vs.action[g, e.v1]), int(vs.action[g, e.v2])
            assert frozenset((a, b)) in pairs
            d = tuple(x - y for x, y in zip(vs.vertices[a], vs.vertices[b]))
            assert d == vs.W.act(g, e.direction)
    s = simplicity_check(vs, es)
    assert min(s.degrees) >= s.dim


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=3, max_size=7, unique=True),
       st.data())
def test_edge_certificate_symmetric(points, data):
    i = data.draw(st.integers(0, len(points) - 1))
    j = data.draw(st.integers(0, len(points) - 1))
    if i != j:
        assert edge_certificate(points, i, j) == edge_certificate(points, j, i)
