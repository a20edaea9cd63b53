from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gkm_embed.errors import ConfigError, InputError
from gkm_embed.rootlat import (
    act,
    build_root_system,
    cosets_and_stabilizers,
    enumerate_weyl,
    root_count,
    weyl_order,
)

CASES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("D", 4)]


@pytest.mark.parametrize("family,rank", CASES)
def test_root_and_group_counts(family, rank):
    rs = build_root_system(family, rank)
    W = enumerate_weyl(rs)
    assert len(rs.roots) == root_count(family, rank)
    assert len(rs.positive_roots) * 2 == len(rs.roots)
    assert len(W) == weyl_order(family, rank)


def test_small_examples():
    rs = build_root_system("A", 1)
    assert set(rs.roots) == {(1, -1), (-1, 1)}
    assert len(build_root_system("A", 2).roots) == 6
    assert len(build_root_system("B", 2).roots) == 8
    assert [len(enumerate_weyl(build_root_system(f, n))) for f, n in [("A", 1), ("A", 2), ("B", 2)]] == [2, 6, 8]


@pytest.mark.parametrize("family,rank", CASES)
def test_cartan_matrix_matches_inner_products(family, rank):
    # a_ij = 2 (a_i, a_j) / (a_i, a_i) from the Euclidean form on the coordinates
    rs = build_root_system(family, rank)
    S = [np.array(a) for a in rs.simple_roots]
    want = [[Fraction(2 * int(a @ b), int(a @ a)) for b in S] for a in S]
    assert rs.cartan_matrix().tolist() == want


def test_cartan_b2_c2():
    assert build_root_system("B", 2).cartan_matrix().tolist() == [[2, -1], [-2, 2]]
    assert build_root_system("C", 2).cartan_matrix().tolist() == [[2, -2], [-1, 2]]
    assert build_root_system("A", 3).cartan_matrix().tolist() == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]


@pytest.mark.parametrize("family,rank", CASES)
def test_reflections_permute_roots(family, rank):
    rs = build_root_system(family, rank)
    roots = set(rs.roots)
    pos = set(rs.positive_roots)
    for a in rs.positive_roots:
        M = rs.reflection_matrix(a)
        assert {tuple(int(x) for x in M @ np.array(b)) for b in roots} == roots
    # a simple reflection permutes the remaining positive roots
    for a in rs.simple_roots:
        M = rs.reflection_matrix(a)
        moved = {tuple(int(x) for x in M @ np.array(b)) for b in pos - {a}}
        assert moved == pos - {a}


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("C", 3), ("D", 4)])
def test_weyl_group_closed_and_preserves_pairing(family, rank):
    rs = build_root_system(family, rank)
    W = enumerate_weyl(rs)
    keys = {w.key for w in W}
    roots = set(rs.roots)
    for w in W:
        assert w.inverse().key in keys
        assert {act(w, a) for a in roots} == roots
        # orthogonal, so the coroot pairing is preserved
        assert np.array_equal(w.matrix.T @ w.matrix, np.eye(rs.ambient_rank, dtype=np.int64))
    for i in range(0, len(W), 5):
        for j in range(0, len(W), 7):
            assert (W[i] * W[j]).key in keys


def test_enumeration_is_deterministic():
    a = [w.key for w in enumerate_weyl(build_root_system("B", 3))]
    b = [w.key for w in enumerate_weyl(build_root_system("B", 3))]
    assert a == b == sorted(a)


def test_act_examples():
    rs = build_root_system("A", 2)
    W = enumerate_weyl(rs)
    s1 = W.generators[0]
    assert W.act(W.identity, (3, -1, 5)) == (3, -1, 5)
    assert W.act(s1, rs.simple_roots[0]) == tuple(-x for x in rs.simple_roots[0])
    assert W.act(s1, (1, 0, 0)) == (0, 1, 0)
    with pytest.raises(InputError):
        act(W[0], (1, 0))


def test_cosets():
    rs = build_root_system("A", 2)
    W = enumerate_weyl(rs)
    stab, cos = cosets_and_stabilizers(rs, W, (1, 0, 0))
    assert len(cos) == 3 and len(stab) == 2
    assert cos[0].point == (1, 0, 0) and cos[0].rep == W.identity
    stab, cos = cosets_and_stabilizers(rs, W, (0, 0, 0))
    assert len(cos) == 1 and len(stab) == 6
    stab, cos = cosets_and_stabilizers(rs, W, (2, 1, 0))
    assert len(cos) == 6 and stab == [W.identity]


def test_config_errors():
    for fam, n in [("E", 6), ("A", 0), ("D", 2), ("G2", 2)]:
        with pytest.raises(ConfigError):
            build_root_system(fam, n)


weights = st.lists(st.integers(-4, 4), min_size=4, max_size=4)


@given(weights, weights, st.integers(0, 23), st.integers(0, 23))
def test_action_is_linear_and_multiplicative(x, y, i, j):
    W = enumerate_weyl(build_root_system("A", 3))
    s = tuple(a + b for a, b in zip(x, y))
    assert W.act(i, s) == tuple(a + b for a, b in zip(W.act(i, x), W.act(i, y)))
    assert W.act(W.mul(i, j), x) == W.act(i, W.act(j, x))
    assert W.act(W.inv[i], W.act(i, x)) == tuple(x)


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.sampled_from(["B", "C"]))
def test_orbit_stabilizer(mu, family):
    rs = build_root_system(family, 2)
    W = enumerate_weyl(rs)
    stab, cos = cosets_and_stabilizers(rs, W, mu)
    assert len(W) == len(stab) * len(cos)
    assert sorted(m for c in cos for m in c.members) == list(range(len(W)))
