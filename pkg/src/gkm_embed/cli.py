"""Command-line front end.

    gkm-embed describe --input rook2.json
    gkm-embed betti --input rook3.json --max-degree 8
    gkm-embed oracle-compare --n 3

Exit codes: 0 ok, 1 invalid input, 2 internal invariant failure (a
diagnostic dump goes to stderr), 3 a verification report failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import jsonschema

from .errors import ConfigError, InputError, InvariantError, VerificationError
from .gkm import build_gkm, build_toric_gkm, export
from .polytope import edges, orbit_polytope, simplicity_check
from .ppring import check_membership, hilbert_deconvolution, hilbert_profile, invariant_graded_dimension, toric_compare, tuple_from_json
from .renner import annotate_edges, fixed_points, l_j_set, quasi_regularity
from .rookoracle import compare, oracle_gkm
from .rootlat import build_root_system, enumerate_weyl

INPUT_SCHEMA = {
    "type": "object",
    "required": ["root_system", "weights"],
    "additionalProperties": False,
    "properties": {
        "root_system": {
            "type": "object",
            "required": ["family", "rank"],
            "additionalProperties": False,
            "properties": {
                "family": {"enum": ["A", "B", "C", "D"]},
                "rank": {"type": "integer", "minimum": 1},
                "lattice": {"enum": ["gl", "central", "plain"]},
            },
        },
        "weights": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "minItems": 1, "items": {"type": "integer"}},
        },
        "options": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "convention": {"enum": ["action", "paper"]},
                "lambda1_chamber": {"enum": ["dominant", "antidominant"]},
                "mode": {"enum": ["exact", "modular"]},
                "max_degree": {"type": "integer", "minimum": 0},
                "seed": {"type": "integer"},
                "check_heights": {"type": "boolean"},
            },
        },
    },
}


@dataclass
class Options:
    convention: str = "action"
    lambda1_chamber: str = "dominant"
    mode: str = "exact"
    max_degree: int | None = None
    seed: int = 0
    check_heights: bool = True


@dataclass
class InputSpec:
    family: str
    rank: int
    lattice: str
    weights: list
    options: Options = field(default_factory=Options)


def load_spec(path: str) -> InputSpec:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    return parse_spec(data)


def parse_spec(data) -> InputSpec:
    try:
        jsonschema.validate(data, INPUT_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InputError(f"input spec invalid at {where}: {exc.message}") from None
    rs = data["root_system"]
    family = rs["family"]
    lattice = rs.get("lattice", "gl" if family == "A" else "central")
    if (family == "A") != (lattice == "gl"):
        raise InputError(f"lattice {lattice!r} does not fit family {family}")
    return InputSpec(family, rs["rank"], lattice, data["weights"], Options(**data.get("options", {})))


class Session:
    """Lazily built pipeline objects for one input spec."""

    def __init__(self, spec: InputSpec):
        self.spec = spec
        central = None if spec.family == "A" else spec.lattice == "central"
        self.rs = build_root_system(spec.family, spec.rank, central)
        self.W = enumerate_weyl(self.rs)
        o = spec.options
        self.vs = orbit_polytope(self.rs, spec.weights, self.W, o.lambda1_chamber, o.check_heights)
        self.poly_edges = annotate_edges(self.vs, edges(self.vs))
        self._x = self._y = None

    @property
    def x_graph(self):
        if self._x is None:
            self._x = build_gkm(self.vs, self.poly_edges, self.spec.options.convention)
        return self._x

    @property
    def y_graph(self):
        if self._y is None:
            self._y = build_toric_gkm(self.vs, self.poly_edges)
        return self._y

    def max_degree(self, flag):
        if flag is not None:
            return flag
        if self.spec.options.max_degree is not None:
            return self.spec.options.max_degree
        return self.x_graph.meta["dim"]


def _table(rows) -> str:
    width = max(len(str(k)) for k, _ in rows)
    return "".join(f"{str(k).ljust(width)}  {v}\n" for k, v in rows)


def _emit(args, text: str | bytes) -> None:
    data = text.encode() if isinstance(text, str) else text
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_describe(s: Session, args) -> int:
    g = s.x_graph
    fps = fixed_points(s.vs)
    q = quasi_regularity(s.vs, fps)
    simp = simplicity_check(s.vs, s.poly_edges)
    ljs = l_j_set(s.vs, s.poly_edges)
    h = {"one": 0, "two": 0}
    for e in s.poly_edges:
        h[e.h_class] += 1
    kinds = g.kind_counts()
    info = {
        "family": s.rs.family,
        "rank": s.rs.rank,
        "ambient_rank": s.rs.ambient_rank,
        "W": len(s.W),
        "J": [list(l.J) for l in ljs],
        "Lambda_1": [list(s.vs.vertices[v]) for v in s.vs.representative],
        "L_J": [len(l.edges) for l in ljs],
        "E_1": len(s.vs),
        "E_2": len(s.poly_edges),
        "R_1": q.r1,
        "curves": {"kind1": kinds[1], "kind2": kinds[2], "kind3": kinds[3], "total": len(g.edges)},
        "h_classes": h,
        "polytope_dim": simp.dim,
        "dim_X": g.meta["dim"],
        "rationally_smooth": simp.is_simple,
        "quasi_regular": q.verdict,
    }
    if args.format == "json":
        _emit(args, _json(info))
    else:
        rows = [(k, v) for k, v in info.items() if k != "curves"]
        rows[rows.index(("h_classes", h)):rows.index(("h_classes", h))] = [
            (f"curves_{k}", v) for k, v in info["curves"].items()
        ]
        _emit(args, _table([(k, json.dumps(v) if isinstance(v, (list, dict, bool)) else v) for k, v in rows]))
    return 0


def cmd_graph(s: Session, args, toric=False) -> int:
    g = s.y_graph if toric else s.x_graph
    fmt = "json" if args.format == "table" else args.format
    _emit(args, export(g, fmt))
    return 0


def _profile(s: Session, args):
    o = s.spec.options
    D = s.max_degree(args.max_degree)
    return hilbert_profile(s.x_graph, D, o.mode, o.seed)


def cmd_hilbert(s: Session, args) -> int:
    p = _profile(s, args)
    if args.format == "json":
        _emit(args, _json({"dims": p.dims, "mode": p.mode}))
    else:
        _emit(args, " ".join(map(str, p.dims)) + "\n")
    return 0


def cmd_betti(s: Session, args) -> int:
    p = _profile(s, args)
    g = s.x_graph
    rep = hilbert_deconvolution(p, g.nvars, g.meta["dim"], len(g.vertices))
    D = len(p.dims) - 1
    betti = rep.betti[: min(D, g.meta["dim"]) + 1]
    if args.format == "json":
        _emit(args, _json({"betti": betti, "ok": rep.ok, "problems": rep.problems, "mode": p.mode}))
    else:
        _emit(args, " ".join(map(str, betti)) + "\n")
    if not rep.ok:
        for msg in rep.problems:
            print(f"verification failed: {msg}", file=sys.stderr)
        return 3
    return 0


def cmd_invariants(s: Session, args) -> int:
    o = s.spec.options
    D = s.max_degree(args.max_degree)
    g = s.y_graph if args.graph == "toric" else s.x_graph
    dims = [invariant_graded_dimension(g, args.group, d, o.mode, o.seed + d) for d in range(D + 1)]
    if args.format == "json":
        _emit(args, _json({"group": args.group, "graph": args.graph, "dims": dims}))
    else:
        _emit(args, " ".join(map(str, dims)) + "\n")
    return 0


def cmd_check(s: Session, args) -> int:
    if not args.tuple:
        raise InputError("check needs --tuple FILE")
    try:
        raw = json.loads(Path(args.tuple).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot load tuple file {args.tuple}: {exc}") from None
    g = s.x_graph
    res = check_membership(g, tuple_from_json(raw, g.nvars))
    if args.format == "json":
        _emit(args, _json({"member": res.ok, "violations": res.violations}))
    else:
        _emit(args, "member\n" if res.ok else "not a member; violated edges: " + " ".join(map(str, res.violations)) + "\n")
    return 0 if res.ok else 3


def cmd_toric_compare(s: Session, args) -> int:
    o = s.spec.options
    D = args.max_degree if args.max_degree is not None else (o.max_degree if o.max_degree is not None else 3)
    c = toric_compare(s.x_graph, s.y_graph, D, o.mode, o.seed)
    if args.format == "json":
        _emit(args, _json({"degree": c.degrees, "inv_X": c.inv_x, "kernel": c.kernel, "inv_Y": c.inv_y,
                           "injective": c.injective, "isomorphism": c.isomorphism}))
    else:
        head = ("degree", "inv_X", "kernel", "inv_Y", "injective", "isomorphism")
        rows = [head] + [tuple(map(str, t)) for t in zip(c.degrees, c.inv_x, c.kernel, c.inv_y, c.injective, c.isomorphism)]
        widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
        _emit(args, "".join("  ".join(x.rjust(w) for x, w in zip(r, widths)) + "\n" for r in rows))
    return 0


def cmd_oracle_compare(args) -> int:
    n = args.n
    if n is None:
        raise InputError("oracle-compare needs --n")
    oracle = oracle_gkm(n, args.convention)
    if n == 1:
        raise ConfigError("the pipeline needs rank >= 1, so oracle-compare needs n >= 2")
    rs = build_root_system("A", n - 1)
    vs = orbit_polytope(rs, [[1] + [0] * (n - 1)])
    rep = compare(oracle, build_gkm(vs, annotate_edges(vs, edges(vs)), args.convention))
    if args.format == "json":
        _emit(args, _json({"n": n, "match": rep.ok, "discrepancies": rep.discrepancies}))
    else:
        _emit(args, ("match\n" if rep.ok else "mismatch\n") + "".join(f"  {d}\n" for d in rep.discrepancies))
    return 0 if rep.ok else 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gkm-embed", description="GKM data and piecewise polynomials for group embeddings")
    p.add_argument("command", choices=["describe", "graph", "toric-graph", "hilbert", "betti", "invariants",
                                       "check", "toric-compare", "oracle-compare"])
    p.add_argument("--input", help="input spec JSON")
    p.add_argument("--format", choices=["json", "dot", "table"], default="table")
    p.add_argument("--output", help="write here instead of stdout")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--group", choices=["wxw", "diag"], default="wxw")
    p.add_argument("--graph", choices=["x", "toric"], default="x", help="graph for invariants")
    p.add_argument("--tuple", help="tuple JSON for check")
    p.add_argument("--n", type=int, help="rook size for oracle-compare")
    p.add_argument("--convention", choices=["action", "paper"], default="action", help="oracle-compare only")
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.format == "dot" and args.command not in ("graph", "toric-graph"):
            raise InputError("--format dot only applies to graph and toric-graph")
        if args.max_degree is not None and args.max_degree < 0:
            raise InputError("--max-degree must be nonnegative")
        if args.command == "oracle-compare":
            return cmd_oracle_compare(args)
        if not args.input:
            raise InputError(f"{args.command} needs --input")
        s = Session(load_spec(args.input))
        if args.command == "invariants" and args.graph == "toric" and args.group != "diag":
            raise InputError("the toric graph only carries the diagonal action; use --group diag")
        handlers = {
            "describe": cmd_describe,
            "graph": cmd_graph,
            "toric-graph": lambda s, a: cmd_graph(s, a, toric=True),
            "hilbert": cmd_hilbert,
            "betti": cmd_betti,
            "invariants": cmd_invariants,
            "check": cmd_check,
            "toric-compare": cmd_toric_compare,
        }
        return handlers[args.command](s, args)
    except (InputError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        print(json.dumps(exc.diagnostic, default=repr, indent=2), file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        print(json.dumps(exc.report, default=repr, indent=2), file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
