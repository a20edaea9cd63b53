"""Betti numbers of a few standard embeddings, read off the Hilbert profile.

    python3 scripts/betti_survey.py [--max-degree D] [--mode modular]
"""
import argparse
import time

from gkm_embed.gkm import build_gkm
from gkm_embed.polytope import edges, orbit_polytope
from gkm_embed.ppring import hilbert_deconvolution, hilbert_profile
from gkm_embed.renner import annotate_edges
from gkm_embed.rootlat import build_root_system

SURVEY = [
    ("rook n=2", "A", 1, [(1, 0)]),
    ("rook n=3", "A", 2, [(1, 0, 0)]),
    ("hexagon", "A", 2, [(2, 1, 0)]),
    ("A2 two orbits", "A", 2, [(4, 1, 1), (3, 3, 0)]),
    ("B2 square", "B", 2, [(1, 1, 1)]),
    ("C2 diamond", "C", 2, [(1, 0, 1)]),
    ("B2 octagon", "B", 2, [(2, 1, 1)]),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, help="default: dim X")
    ap.add_argument("--mode", default="modular", choices=["exact", "modular"])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"{'input':<14} {'|R_1|':>5} {'dim':>3}  {'smooth':<6} betti")
    for label, fam, n, weights in SURVEY:
        t0 = time.perf_counter()
        vs = orbit_polytope(build_root_system(fam, n), weights)
        g = build_gkm(vs, annotate_edges(vs, edges(vs)))
        D = args.max_degree if args.max_degree is not None else g.meta["dim"]
        p = hilbert_profile(g, D, args.mode, args.seed)
        rep = hilbert_deconvolution(p, g.nvars, g.meta["dim"], len(g.vertices))
        flag = "" if rep.ok else "  [" + "; ".join(rep.problems) + "]"
        smooth = "yes" if g.meta["rationally_smooth"] else "no"
        print(f"{label:<14} {len(g.vertices):>5} {g.meta['dim']:>3}  {smooth:<6} {' '.join(map(str, rep.betti))}"
              f"  ({time.perf_counter() - t0:.1f}s){flag}", flush=True)


if __name__ == "__main__":
    main()
