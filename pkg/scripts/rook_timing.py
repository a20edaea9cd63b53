"""Wall-clock of the Hilbert profile for rook inputs, exact against modular.

    python3 scripts/rook_timing.py [--n 3] [--max-degree 8]
"""
import argparse
import time

from gkm_embed.gkm import build_gkm
from gkm_embed.polytope import edges, orbit_polytope
from gkm_embed.ppring import hilbert_deconvolution, hilbert_profile
from gkm_embed.renner import annotate_edges
from gkm_embed.rootlat import build_root_system


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--max-degree", type=int)
    args = ap.parse_args()
    n = args.n
    vs = orbit_polytope(build_root_system("A", n - 1), [(1,) + (0,) * (n - 1)])
    g = build_gkm(vs, annotate_edges(vs, edges(vs)))
    D = args.max_degree if args.max_degree is not None else g.meta["dim"]
    for mode in ("modular", "exact"):
        t0 = time.perf_counter()
        p = hilbert_profile(g, D, mode, seed=1)
        dt = time.perf_counter() - t0
        rep = hilbert_deconvolution(p, g.nvars, g.meta["dim"], len(g.vertices))
        print(f"n={n} D={D} {mode:<8} {dt:7.2f}s  dims[-1]={p.dims[-1]}  betti={' '.join(map(str, rep.betti))}")


if __name__ == "__main__":
    main()
