"""Piecewise polynomials on a moment graph.

A tuple assigns a polynomial in 2r variables to every vertex; it is a
member when, across every edge, the difference of the endpoint polynomials
is divisible by the edge character.  Graded dimensions of the member space
come from the nullity of the linear system "restriction of f_a - f_b to the
hyperplane chi = 0 vanishes", assembled degree by degree.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import InputError, VerificationError
from .gkm import GKMGraph
from .linalg import check_modulus_safe, nullity, nullspace_rational, rank_exact
from .renner import normalize_sign

Monomial = tuple[int, ...]


class Polynomial:
    """Sparse polynomial with Fraction coefficients; zero terms never stored."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        self.terms: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise InputError(f"monomial {m} has {len(m)} exponents, expected {nvars}")
            c = Fraction(c)
            if c:
                self.terms[tuple(m)] = self.terms.get(tuple(m), 0) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        """Trusted constructor: exact coefficients, right-length keys; zeros dropped here."""
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = {m: c for m, c in terms.items() if c}
        return obj

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def linear(cls, coeffs: Sequence):
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs) if c})

    @classmethod
    def variable(cls, nvars, i):
        return cls.linear([int(j == i) for j in range(nvars)])

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            parts.append(f"{self.terms[m]}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise InputError("polynomials in different numbers of variables")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return Polynomial._raw(self.nvars, t)

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return Polynomial._raw(self.nvars, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        t: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = t.get(m, 0) + c1 * c2
        return Polynomial._raw(self.nvars, t)

    __rmul__ = scale

    def __pow__(self, e: int):
        out = Polynomial.constant(self.nvars)
        for _ in range(e):
            out = out * self
        return out

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d})

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace variable i by images[i]."""
        out = Polynomial(images[0].nvars if images else 0)
        for m, c in self.terms.items():
            term = Polynomial.constant(out.nvars, c)
            for i, e in enumerate(m):
                if e:
                    term = term * images[i] ** e
            out = out + term
        return out

    def divisible_by_linear(self, chi: Sequence[int]) -> bool:
        """chi | self, decided by restricting to the hyperplane chi = 0."""
        return not restrict_to_hyperplane(self, chi)


def restrict_to_hyperplane(f: Polynomial, chi: Sequence[int]) -> Polynomial:
    """Substitute out the largest-index variable with nonzero chi coefficient."""
    n = f.nvars
    if len(chi) != n:
        raise InputError(f"character of length {len(chi)} for polynomial in {n} variables")
    p = max((i for i, x in enumerate(chi) if x), default=None)
    if p is None:
        raise InputError("zero character")
    powers = _pivot_powers(tuple(int(x) for x in chi), max((m[p] for m in f.terms), default=0))
    out: dict[Monomial, Fraction] = {}
    for m, c in f.terms.items():
        e = m[p]
        if not e:
            out[m] = out.get(m, 0) + c
            continue
        for pm, pc in powers[e].items():
            t = tuple(a + b for a, b in zip(m, pm))
            t = t[:p] + (0,) + t[p + 1 :]
            out[t] = out.get(t, 0) + c * pc
    return Polynomial._raw(n, out)


_POWERS: dict[tuple[int, ...], list[dict[Monomial, Fraction]]] = {}


def _pivot_powers(chi: tuple[int, ...], e: int) -> list[dict[Monomial, Fraction]]:
    """Powers 0..e of the pivot variable's value on chi = 0."""
    pw = _POWERS.get(chi)
    if pw is None or len(pw) <= e:
        p = max(i for i, x in enumerate(chi) if x)
        L = Polynomial.linear([Fraction(-x, chi[p]) if i != p else 0 for i, x in enumerate(chi)])
        cur = Polynomial.constant(len(chi))
        pw = [dict(cur.terms)]
        for _ in range(e):
            cur = cur * L
            pw.append(dict(cur.terms))
        _POWERS[chi] = pw
    return pw


@lru_cache(maxsize=None)
def monomials(nvars: int, d: int) -> tuple[Monomial, ...]:
    """Exponent vectors of total degree d, in a fixed order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials(nvars, d))}


def n_monomials(nvars: int, d: int) -> int:
    return comb(nvars + d - 1, d) if nvars else int(d == 0)


@lru_cache(maxsize=None)
def _restriction_table(chi: tuple[int, ...], d: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each degree-d monomial m, the integer row of chi_p^d * m|_{chi=0}.

    Entries are (target monomial id, coefficient); targets are indexed among
    the degree-d monomials (the pivot variable never appears in them).
    """
    n = len(chi)
    p = max(i for i, x in enumerate(chi) if x)
    c = chi[p]
    L = Polynomial.linear([-x if i != p else 0 for i, x in enumerate(chi)])
    powers = [Polynomial.constant(n)]
    for _ in range(d):
        powers.append(powers[-1] * L)
    idx = monomial_index(n, d)
    table = []
    for m in monomials(n, d):
        e = m[p]
        base = list(m)
        base[p] = 0
        row: dict[int, int] = {}
        scale = c ** (d - e)
        for pm, pc in powers[e].terms.items():
            t = tuple(a + b for a, b in zip(base, pm))
            v = int(pc) * scale
            if v:
                k = idx[t]
                row[k] = row.get(k, 0) + v
        table.append(tuple((k, v) for k, v in row.items() if v))
    return tuple(table)


def edge_rows(chars: Sequence[tuple[int, ...]], ends: Sequence[tuple[int, int]], nvars: int, d: int) -> list[dict[int, int]]:
    """Congruence equations on unknowns (vertex, monomial) -> vertex*N + monomial."""
    N = n_monomials(nvars, d)
    rows = []
    for chi, (a, b) in zip(chars, ends):
        table = _restriction_table(tuple(normalize_sign(chi)), d)
        per_target: dict[int, dict[int, int]] = {}
        for mi, entries in enumerate(table):
            for t, v in entries:
                r = per_target.setdefault(t, {})
                r[a * N + mi] = r.get(a * N + mi, 0) + v
                r[b * N + mi] = r.get(b * N + mi, 0) - v
        for t in sorted(per_target):
            r = {k: v for k, v in per_target[t].items() if v}
            if r:
                rows.append(r)
    return rows


def character_kernel_reduction(chars: Sequence[Sequence[int]], nvars: int) -> tuple[list[int], list[int]]:
    """Coordinates J onto which the common kernel K of the characters projects isomorphically.

    Returns (kept, dropped).  The member space is the member space of the
    graph with characters restricted to ``kept`` tensored with Q[x_j, j in J].
    """
    rows = [{i: x for i, x in enumerate(c) if x} for c in chars]
    K = nullspace_rational(rows, nvars) if rows else [{i: Fraction(1)} for i in range(nvars)]
    k = len(K)
    dropped: list[int] = []
    # greedy from the last coordinate keeps the choice deterministic
    for j in reversed(range(nvars)):
        if len(dropped) == k:
            break
        cand = dropped + [j]
        M = [[v.get(c, 0) for c in cand] for v in K]
        if rank_exact(M) == len(cand):
            dropped = cand
    if len(dropped) != k:
        raise VerificationError("could not split off the character kernel", {"kernel_dim": k})
    kept = [i for i in range(nvars) if i not in dropped]
    return kept, sorted(dropped)


@dataclass
class MembershipResult:
    ok: bool
    violations: list[int]

    def __bool__(self):
        return self.ok


PolyTuple = dict  # vertex id -> Polynomial


def _validate_tuple(graph: GKMGraph, tup: Mapping[int, Polynomial]) -> None:
    keys = set(tup)
    want = set(range(len(graph.vertices)))
    if keys != want:
        missing = sorted(want - keys)[:5]
        extra = sorted(keys - want, key=str)[:5]
        raise InputError(f"tuple keys do not match graph vertices (missing {missing}, extra {extra})")
    for k, f in tup.items():
        if f.nvars != graph.nvars:
            raise InputError(f"polynomial at vertex {k} has {f.nvars} variables, expected {graph.nvars}")


def check_membership(graph: GKMGraph, tup: Mapping[int, Polynomial], edges: Iterable[int] | None = None) -> MembershipResult:
    _validate_tuple(graph, tup)
    ids = range(len(graph.edges)) if edges is None else edges
    bad = []
    for k in ids:
        e = graph.edges[k]
        diff = tup[e.a] - tup[e.b]
        if diff and not diff.divisible_by_linear(e.char):
            bad.append(k)
    return MembershipResult(not bad, bad)


def decomposed_membership(graph: GKMGraph, tup: Mapping[int, Polynomial], poly_edges, convention: str = "action") -> MembershipResult:
    """Membership via closed-orbit edges plus curve conditions rebuilt from polytope edges.

    The second half does not read the kind-3 edges of ``graph``: for each
    polytope edge f and u in W it recomputes both endpoints and the
    character by matrix action and checks the congruence directly.
    """
    _validate_tuple(graph, tup)
    vs = graph.vs
    W = vs.W
    r = graph.rank
    closed = [k for k, e in enumerate(graph.edges) if e.kind in (1, 2)]
    bad = set(check_membership(graph, tup, closed).violations)
    for f in poly_edges:
        mu1, mu2 = vs.vertices[f.v1], vs.vertices[f.v2]
        lam = tuple(a - b for a, b in zip(mu1, mu2))
        for u in range(len(W)):
            Minv = W[u].matrix.T  # Weyl matrices are orthogonal
            ends = []
            for v, mu in ((f.v1, mu1), (f.v2, mu2)):
                nu = tuple(int(x) for x in Minv @ mu)
                fp = type(graph.vertices[0])(vs.orbit[v], vs.coset[v], vs.coset[vs.index(nu)])
                ends.append(graph.vertex_ids[fp])
            rho = tuple(int(x) for x in Minv @ lam)
            if convention == "action":
                rho = tuple(-x for x in rho)
            diff = tup[ends[0]] - tup[ends[1]]
            if diff and not diff.divisible_by_linear(tuple(lam) + rho):
                k = graph.edge_between(*ends)
                bad.add(k if k is not None else -1)
    return MembershipResult(not bad, sorted(bad))


@dataclass
class HilbertProfile:
    dims: list[int]
    mode: str
    info: list[dict] = field(default_factory=list)
    nvars: int = 0


def _reduced_system(graph: GKMGraph):
    chars = [e.char for e in graph.edges]
    kept, dropped = character_kernel_reduction(chars, graph.nvars)
    proj = [tuple(c[i] for i in kept) for c in chars]
    return kept, dropped, proj


def graded_dimension(graph: GKMGraph, d: int, mode: str = "exact", seed: int = 0, reduce: bool = True) -> int:
    return graded_dimension_info(graph, d, mode, seed, reduce)[0]


def graded_dimension_info(graph: GKMGraph, d: int, mode: str = "exact", seed: int = 0, reduce: bool = True) -> tuple[int, dict]:
    if d < 0:
        raise InputError("degree must be nonnegative")
    nv = len(graph.vertices)
    ends = [(e.a, e.b) for e in graph.edges]
    if not reduce:
        rows = edge_rows([e.char for e in graph.edges], ends, graph.nvars, d)
        return nullity(rows, nv * n_monomials(graph.nvars, d), mode, seed)
    kept, dropped, proj = _reduced_system(graph)
    s, k = len(kept), len(dropped)
    total, infos = 0, []
    for j in range(d + 1):
        rows = edge_rows(proj, ends, s, j)
        dim_j, info = nullity(rows, nv * n_monomials(s, j), mode, seed + j)
        infos.append(info)
        total += dim_j * n_monomials(k, d - j)
    return total, {"mode": mode, "reduced_vars": s, "free_vars": k, "slices": infos}


def hilbert_profile(graph: GKMGraph, D: int, mode: str = "exact", seed: int = 0) -> HilbertProfile:
    """dims[0..D], computing each reduced slice only once."""
    nv = len(graph.vertices)
    ends = [(e.a, e.b) for e in graph.edges]
    kept, dropped, proj = _reduced_system(graph)
    s, k = len(kept), len(dropped)
    slices, infos = [], []
    for j in range(D + 1):
        rows = edge_rows(proj, ends, s, j)
        dj, info = nullity(rows, nv * n_monomials(s, j), mode, seed + j)
        slices.append(dj)
        infos.append(info)
    dims = [sum(slices[j] * n_monomials(k, d - j) for j in range(d + 1)) for d in range(D + 1)]
    return HilbertProfile(dims, mode, infos, graph.nvars)


@dataclass
class BettiReport:
    betti: list[int]
    ok: bool
    problems: list[str]


def hilbert_deconvolution(profile: HilbertProfile, nvars: int | None = None, dim_x: int | None = None, n_fixed: int | None = None) -> BettiReport:
    """b(t) = dims(t) (1 - t)^nvars truncated at the profile length."""
    n = profile.nvars if nvars is None else nvars
    dims = profile.dims
    D = len(dims) - 1
    b = []
    for k in range(D + 1):
        b.append(sum((-1) ** j * comb(n, j) * dims[k - j] for j in range(min(k, n) + 1)))
    problems = [f"b_{k} = {x} is negative" for k, x in enumerate(b) if x < 0]
    if dim_x is not None and D >= dim_x:
        head, tail = b[: dim_x + 1], b[dim_x + 1 :]
        if any(tail):
            problems.append(f"nonzero coefficients above dim X = {dim_x}: {tail}")
        if head != head[::-1]:
            problems.append(f"not palindromic up to dim X: {head}")
        if n_fixed is not None and sum(head) != n_fixed:
            problems.append(f"sum {sum(head)} differs from the fixed-point count {n_fixed}")
    return BettiReport(b, not problems, problems)


# -- group actions on tuples ---------------------------------------------------


def generators(graph: GKMGraph, group: str) -> list[tuple[int, int]]:
    W = graph.vs.W
    e = W.identity
    if group == "wxw":
        return [(g, e) for g in W.generators] + [(e, g) for g in W.generators]
    if group == "diag":
        return [(g, g) for g in W.generators]
    raise InputError(f"unknown group {group!r}; expected 'wxw' or 'diag'")


def _variable_images(graph: GKMGraph, g: tuple[int, int]) -> list[Polynomial]:
    W = graph.vs.W
    r = graph.rank
    n = graph.nvars
    imgs = []
    for side, w in enumerate(g):
        A = W[w].matrix
        for i in range(r):
            col = [0] * n
            for j in range(r):
                col[side * r + j] = int(A[j, i])
            imgs.append(Polynomial.linear(col))
    return imgs


def act_on_polynomial(graph: GKMGraph, g: tuple[int, int], f: Polynomial) -> Polynomial:
    return f.substitute(_variable_images(graph, g))


def act_on_tuple(graph: GKMGraph, g: tuple[int, int], tup: Mapping[int, Polynomial]) -> dict[int, Polynomial]:
    from .gkm import vertex_image

    imgs = _variable_images(graph, g)
    return {vertex_image(graph, g, v): f.substitute(imgs) for v, f in tup.items()}


def invariance_rows(graph: GKMGraph, gens: Sequence[tuple[int, int]], d: int) -> list[dict[int, int]]:
    from .gkm import vertex_image

    n = graph.nvars
    N = n_monomials(n, d)
    idx = monomial_index(n, d)
    rows = []
    for g in gens:
        imgs = _variable_images(graph, g)
        table = []
        for m in monomials(n, d):
            p = Polynomial(n, {m: 1}).substitute(imgs)
            table.append([(idx[t], c) for t, c in p.terms.items()])
        for v in range(len(graph.vertices)):
            gv = vertex_image(graph, g, v)
            per: dict[int, dict[int, object]] = {}
            for mi, entries in enumerate(table):
                for t, c in entries:
                    per.setdefault(t, {})
                    per[t][v * N + mi] = per[t].get(v * N + mi, 0) - c
            for t in range(N):
                row = per.get(t, {})
                row[gv * N + t] = row.get(gv * N + t, 0) + 1
                row = {k: c for k, c in row.items() if c}
                if row:
                    rows.append(row)
    return rows


def _check_primes(graph: GKMGraph, info: dict, group_order: int) -> None:
    for p in info.get("primes", []):
        check_modulus_safe(p, group_order)


def invariant_graded_dimension(graph: GKMGraph, group: str, d: int, mode: str = "exact", seed: int = 0, extra_rows=None) -> int:
    rows = _invariant_rows(graph, group, d)
    if extra_rows:
        rows = rows + list(extra_rows)
    dim, info = nullity(rows, len(graph.vertices) * n_monomials(graph.nvars, d), mode, seed)
    nW = len(graph.vs.W)
    _check_primes(graph, info, nW * nW)
    return dim


def _invariant_rows(graph, group, d):
    ends = [(e.a, e.b) for e in graph.edges]
    return edge_rows([e.char for e in graph.edges], ends, graph.nvars, d) + invariance_rows(graph, generators(graph, group), d)


@dataclass
class ToricComparison:
    degrees: list[int]
    inv_x: list[int]
    kernel: list[int]
    inv_y: list[int]

    @property
    def injective(self) -> list[bool]:
        return [k == 0 for k in self.kernel]

    @property
    def isomorphism(self) -> list[bool]:
        return [k == 0 and x == y for k, x, y in zip(self.kernel, self.inv_x, self.inv_y)]


def toric_compare(x_graph: GKMGraph, y_graph: GKMGraph, D: int, mode: str = "exact", seed: int = 0) -> ToricComparison:
    """Restriction of W x W-invariant tuples on X to the fixed points of Y.

    The fixed point of Y at vertex v is the X-vertex (orbit, coset, coset);
    the restriction is injective in degree d iff no nonzero invariant
    vanishes at all such vertices, and an isomorphism iff moreover the
    invariant dimensions agree with the diag(W)-invariants on the Y-graph.
    """
    if x_graph.meta.get("source") != y_graph.meta.get("source") or not y_graph.meta.get("toric") or x_graph.meta.get("toric"):
        raise InputError("toric comparison needs an X-graph and the Y-graph of the same input")
    diag = [x_graph.vertex_ids[fp] for fp in y_graph.vertices]
    inv_x, ker, inv_y = [], [], []
    for d in range(D + 1):
        N = n_monomials(x_graph.nvars, d)
        rows = _invariant_rows(x_graph, "wxw", d)
        ncols = len(x_graph.vertices) * N
        nW = len(x_graph.vs.W)
        dx, info = nullity(rows, ncols, mode, seed + d)
        _check_primes(x_graph, info, nW * nW)
        vanish = [{v * N + m: 1} for v in diag for m in range(N)]
        dk, info = nullity(rows + vanish, ncols, mode, seed + d)
        _check_primes(x_graph, info, nW * nW)
        inv_x.append(dx)
        ker.append(dk)
        inv_y.append(invariant_graded_dimension(y_graph, "diag", d, mode, seed + d))
    return ToricComparison(list(range(D + 1)), inv_x, ker, inv_y)


# -- random tuples -------------------------------------------------------------


def member_basis(graph: GKMGraph, d: int) -> list[dict[int, Polynomial]]:
    """Exact basis of the degree-d member space in all 2r variables."""
    n = graph.nvars
    N = n_monomials(n, d)
    mons = monomials(n, d)
    rows = edge_rows([e.char for e in graph.edges], [(e.a, e.b) for e in graph.edges], n, d)
    out = []
    for vec in nullspace_rational(rows, len(graph.vertices) * N):
        tup = {v: {} for v in range(len(graph.vertices))}
        for k, c in vec.items():
            tup[k // N][mons[k % N]] = c
        out.append({v: Polynomial(n, t) for v, t in tup.items()})
    return out


def random_member(graph: GKMGraph, bases: Sequence[Sequence[dict]], rng: random.Random) -> dict[int, Polynomial]:
    """Random combination of basis members, plus a product of two members for degree mixing."""
    nv = len(graph.vertices)
    acc: list[dict[Monomial, Fraction]] = [{} for _ in range(nv)]
    for basis in bases:
        for b in basis:
            c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            if c:
                for v in range(nv):
                    t = acc[v]
                    for m, x in b[v].terms.items():
                        t[m] = t.get(m, 0) + c * x
    out = {v: Polynomial._raw(graph.nvars, acc[v]) for v in range(nv)}
    if len(bases[0]) >= 2:
        x, y = rng.sample(list(bases[0]), 2)
        out = {v: out[v] + x[v] * y[v] for v in range(nv)}
    return out


def perturb(tup: Mapping[int, Polynomial], rng: random.Random) -> dict[int, Polynomial]:
    """Add a random linear form at one random vertex."""
    out = dict(tup)
    v = rng.choice(sorted(out))
    n = out[v].nvars
    lin = Polynomial.linear([rng.randint(-2, 2) for _ in range(n)])
    out[v] = out[v] + (lin if lin else Polynomial.variable(n, 0))
    return out


# -- tuple JSON ---------------------------------------------------------------


def tuple_from_json(data, nvars: int) -> dict[int, Polynomial]:
    if not isinstance(data, dict):
        data = json.loads(data)
    out = {}
    for key, terms in data.items():
        try:
            v = int(key)
        except ValueError:
            raise InputError(f"vertex key {key!r} is not an integer") from None
        poly: dict[Monomial, Fraction] = {}
        for t in terms:
            if "monomial" not in t:
                raise InputError(f"term at vertex {v} lacks a monomial")
            raw = t.get("coeffs", t.get("coeff"))
            if raw is None:
                raise InputError(f"term at vertex {v} lacks coefficients")
            vals = raw if isinstance(raw, list) else [raw]
            try:
                c = sum((Fraction(str(x)) for x in vals), Fraction(0))
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad coefficient at vertex {v}: {exc}") from None
            m = tuple(int(x) for x in t["monomial"])
            if len(m) != nvars or min(m, default=0) < 0:
                raise InputError(f"monomial {list(m)} at vertex {v} is not a valid exponent vector of length {nvars}")
            poly[m] = poly.get(m, 0) + c
        out[v] = Polynomial(nvars, poly)
    return out


def tuple_to_json(tup: Mapping[int, Polynomial]) -> dict:
    return {
        str(v): [{"coeffs": [str(c)], "monomial": list(m)} for m, c in sorted(f.terms.items(), reverse=True)]
        for v, f in sorted(tup.items())
    }
