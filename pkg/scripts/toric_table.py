"""Restriction to the torus closure: invariant dimensions per degree.

    python3 scripts/toric_table.py [--max-degree 3]
"""
import argparse

from gkm_embed.gkm import build_gkm, build_toric_gkm
from gkm_embed.polytope import edges, orbit_polytope
from gkm_embed.ppring import toric_compare
from gkm_embed.renner import annotate_edges, is_quasi_regular
from gkm_embed.rootlat import build_root_system

INPUTS = [
    ("rook n=2", "A", 1, [(1, 0)]),
    ("rook n=3", "A", 2, [(1, 0, 0)]),
    ("hexagon", "A", 2, [(2, 1, 0)]),
    ("B2 square", "B", 2, [(1, 1, 1)]),
    ("B2 octagon", "B", 2, [(2, 1, 1)]),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--mode", default="exact", choices=["exact", "modular"])
    args = ap.parse_args()
    for label, fam, n, weights in INPUTS:
        vs = orbit_polytope(build_root_system(fam, n), weights)
        pe = annotate_edges(vs, edges(vs))
        c = toric_compare(build_gkm(vs, pe), build_toric_gkm(vs, pe), args.max_degree, args.mode)
        print(f"{label}  (quasi-regular: {is_quasi_regular(vs)})")
        print("  d  inv_X  kernel  inv_Y  iso")
        for d, x, k, y, iso in zip(c.degrees, c.inv_x, c.kernel, c.inv_y, c.isomorphism):
            print(f"  {d}  {x:>5}  {k:>6}  {y:>5}  {'yes' if iso else 'no'}")


if __name__ == "__main__":
    main()
