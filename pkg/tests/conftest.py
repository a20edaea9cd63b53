from functools import lru_cache

import pytest
from hypothesis import settings

from gkm_embed.gkm import build_gkm, build_toric_gkm
from gkm_embed.polytope import edges, orbit_polytope
from gkm_embed.renner import annotate_edges
from gkm_embed.rootlat import build_root_system

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

INPUTS = {
    "rook2": ("A", 1, [(1, 0)]),
    "rook3": ("A", 2, [(1, 0, 0)]),
    "hexagon": ("A", 2, [(2, 1, 0)]),
    "octahedron": ("A", 3, [(1, 1, 0, 0)]),
    "b2square": ("B", 2, [(1, 1, 1)]),
    "c2diamond": ("C", 2, [(1, 0, 1)]),
    "b2octagon": ("B", 2, [(2, 1, 1)]),
}


@lru_cache(maxsize=None)
def built(name, convention="action"):
    """(VertexSet, annotated polytope edges, X-graph, Y-graph) for a named input."""
    fam, rank, weights = INPUTS[name]
    rs = build_root_system(fam, rank)
    vs = orbit_polytope(rs, weights)
    pe = annotate_edges(vs, edges(vs))
    return vs, pe, build_gkm(vs, pe, convention), build_toric_gkm(vs, pe)


@pytest.fixture(scope="session")
def build():
    return built


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
