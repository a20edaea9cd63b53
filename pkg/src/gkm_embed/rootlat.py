"""Classical root systems and their Weyl groups as integer matrices.

Type A_n lives in the GL lattice Z^{n+1}.  Types B, C, D live in Z^n,
optionally extended by one central coordinate (on which W acts trivially)
so that a monoid's one-dimensional centre has somewhere to live.

Characters are integer column vectors; a Weyl element acts by matrix
multiplication, ``act(w, chi) = w.matrix @ chi``.  With this convention
``chi o int(u) = act(u^{-1}, chi)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ConfigError, InputError

Vector = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D")


def _unit(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


def _sub(a, b):
    return [x - y for x, y in zip(a, b)]


def _add(a, b):
    return [x + y for x, y in zip(a, b)]


def _scale(c, a):
    return [c * x for x in a]


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    ambient_rank: int
    central: bool
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    roots: tuple[Vector, ...] = field(repr=False)
    positive_roots: tuple[Vector, ...] = field(repr=False)

    def pairing(self, coroot: Sequence[int], weight: Sequence[int]) -> int:
        return int(sum(a * b for a, b in zip(coroot, weight)))

    def coroot(self, root: Sequence[int]) -> Vector:
        # alpha^vee = 2 alpha / (alpha, alpha); integral for A-D in these coordinates
        norm = sum(x * x for x in root)
        out = []
        for x in root:
            if (2 * x) % norm:
                raise ConfigError(f"non-integral coroot for {tuple(root)}")
            out.append(2 * x // norm)
        return tuple(out)

    def cartan_matrix(self) -> np.ndarray:
        n = self.rank
        return np.array(
            [[self.pairing(self.simple_coroots[i], self.simple_roots[j]) for j in range(n)] for i in range(n)],
            dtype=np.int64,
        )

    def reflection_matrix(self, root: Sequence[int]) -> np.ndarray:
        a = np.array(root, dtype=np.int64)
        av = np.array(self.coroot(root), dtype=np.int64)
        return np.eye(self.ambient_rank, dtype=np.int64) - np.outer(a, av)

    def height(self, weight: Sequence[int]) -> int:
        """Value of the central grading: coordinate sum for type A, last entry otherwise."""
        if self.family == "A":
            return int(sum(weight))
        if not self.central:
            raise InputError("height needs a central coordinate; build with central=True")
        return int(weight[-1])

    def is_dominant(self, weight: Sequence[int]) -> int | None:
        """Index of the first simple coroot pairing negatively with ``weight``, or None."""
        for i, cv in enumerate(self.simple_coroots):
            if self.pairing(cv, weight) < 0:
                return i
        return None


def _simple_system(family: str, n: int) -> tuple[list[list[int]], list[list[int]]]:
    if family == "A":
        dim = n + 1
        simple = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n)]
        return simple, [list(a) for a in simple]
    dim = n
    simple = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n - 1)]
    co = [list(a) for a in simple]
    if family == "B":
        simple.append(_unit(dim, n - 1))
        co.append(_scale(2, _unit(dim, n - 1)))
    elif family == "C":
        simple.append(_scale(2, _unit(dim, n - 1)))
        co.append(_unit(dim, n - 1))
    elif family == "D":
        last = _add(_unit(dim, n - 2), _unit(dim, n - 1))
        simple.append(last)
        co.append(list(last))
    return simple, co


def build_root_system(family: str, rank: int, central: bool | None = None) -> RootSystem:
    """Root datum of a classical family.

    ``central`` appends a trivial coordinate for B/C/D (default True); type A
    always uses the GL lattice and ignores the flag.
    """
    family = str(family).upper()
    if family not in FAMILIES:
        raise ConfigError(f"unsupported root system family {family!r} (supported: {', '.join(FAMILIES)})")
    if not isinstance(rank, (int, np.integer)) or rank < 1:
        raise ConfigError(f"rank must be a positive integer, got {rank!r}")
    if family == "D" and rank < 3:
        raise ConfigError("type D requires rank >= 3")
    rank = int(rank)
    simple, co = _simple_system(family, rank)
    if family == "A":
        central = False
    elif central is None:
        central = True
    if central:
        simple = [a + [0] for a in simple]
        co = [a + [0] for a in co]
    r = len(simple[0])

    # close the simple roots under simple reflections
    def refl(alpha, cv, x):
        c = sum(p * q for p, q in zip(cv, x))
        return tuple(xi - c * ai for xi, ai in zip(x, alpha))

    roots = set(tuple(a) for a in simple)
    queue = deque(roots)
    while queue:
        x = queue.popleft()
        for alpha, cv in zip(simple, co):
            y = refl(alpha, cv, x)
            if y not in roots:
                roots.add(y)
                queue.append(y)
    # a regular dominant coweight: strictly decreasing coordinates, zero on the centre
    base = rank + 1 if family == "A" else rank
    rho_v = [base - i for i in range(base)] + [0] * (r - base)
    positive = sorted((a for a in roots if sum(p * q for p, q in zip(rho_v, a)) > 0), reverse=True)
    return RootSystem(
        family=family,
        rank=rank,
        ambient_rank=r,
        central=bool(central),
        simple_roots=tuple(tuple(a) for a in simple),
        simple_coroots=tuple(tuple(a) for a in co),
        roots=tuple(sorted(roots, reverse=True)),
        positive_roots=tuple(positive),
    )


class WeylElement:
    """An r x r integer matrix, with the shortest word found during enumeration."""

    __slots__ = ("matrix", "key", "word")

    def __init__(self, matrix, word=()):
        m = np.array(matrix, dtype=np.int64)
        m.setflags(write=False)
        self.matrix = m
        self.key = tuple(int(x) for x in m.ravel())
        self.word = tuple(word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.matrix @ other.matrix, self.word + other.word)

    def inverse(self) -> "WeylElement":
        # matrices are signed permutations, so the inverse is the transpose
        inv = self.matrix.T
        if not np.array_equal(inv @ self.matrix, np.eye(len(inv), dtype=np.int64)):
            inv = np.rint(np.linalg.inv(self.matrix)).astype(np.int64)
        return WeylElement(inv, tuple(reversed(self.word)))

    @property
    def length(self) -> int:
        return len(self.word)

    def __repr__(self):
        return f"WeylElement(word={self.word})"


class WeylGroup:
    """Finite Weyl group with index-based multiplication/inverse tables."""

    def __init__(self, rs: RootSystem, elements: list[WeylElement]):
        self.rs = rs
        self.elements = elements
        self._index = {w.key: i for i, w in enumerate(elements)}
        n = len(elements)
        self.identity = self._index[WeylElement(np.eye(rs.ambient_rank, dtype=np.int64)).key]
        self.inv = [self._index[w.inverse().key] for w in elements]
        self._mul = np.full((n, n), -1, dtype=np.int64)
        self.generators = [self.index_of(rs.reflection_matrix(a)) for a in rs.simple_roots]
        self.reflections = {a: self.index_of(rs.reflection_matrix(a)) for a in rs.positive_roots}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def index_of(self, matrix) -> int:
        key = tuple(int(x) for x in np.asarray(matrix).ravel())
        try:
            return self._index[key]
        except KeyError:
            raise KeyError("matrix is not an element of this Weyl group") from None

    def mul(self, i: int, j: int) -> int:
        v = self._mul[i, j]
        if v < 0:
            v = self.index_of(self.elements[i].matrix @ self.elements[j].matrix)
            self._mul[i, j] = v
        return int(v)

    def act(self, i: int, chi: Sequence[int]) -> Vector:
        return act(self.elements[i], chi)


def enumerate_weyl(rs: RootSystem) -> WeylGroup:
    """All elements of W by breadth-first closure over the simple reflections.

    BFS discovers every element first through a reduced word, so ``word`` is a
    shortest expression.  Elements are returned sorted by matrix entries.
    """
    gens = [WeylElement(rs.reflection_matrix(a), (i,)) for i, a in enumerate(rs.simple_roots)]
    ident = WeylElement(np.eye(rs.ambient_rank, dtype=np.int64))
    seen = {ident.key: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                # word of g*w reads left to right as applied last-first
                y = WeylElement(g.matrix @ w.matrix, g.word + w.word)
                if y.key not in seen:
                    seen[y.key] = y
                    nxt.append(y)
        # deterministic within a BFS layer
        frontier = sorted(nxt)
    return WeylGroup(rs, sorted(seen.values()))


def act(w: WeylElement, chi: Sequence[int]) -> Vector:
    v = np.asarray(chi, dtype=np.int64)
    if v.shape != (w.matrix.shape[0],):
        raise InputError(f"character has dimension {v.shape}, expected {w.matrix.shape[0]}")
    return tuple(int(x) for x in w.matrix @ v)


@dataclass(frozen=True)
class Coset:
    rep: int  # index into W of the canonical representative
    members: tuple[int, ...]
    point: Vector  # w.mu, the orbit point this coset maps to


def _rep_order(W: WeylGroup, i: int):
    w = W[i]
    return (w.length, w.key)


def cosets_and_stabilizers(rs: RootSystem, W: WeylGroup, mu: Sequence[int]) -> tuple[list[int], list[Coset]]:
    """Stabilizer of ``mu`` and the left cosets W/Stab, one per orbit point.

    Representatives are shortest elements, ties broken by matrix order;
    cosets are listed in representative order, so the identity coset
    (the one containing ``mu`` itself) comes first.
    """
    mu = tuple(int(x) for x in mu)
    if len(mu) != rs.ambient_rank:
        raise InputError(f"weight {mu} has wrong dimension for ambient rank {rs.ambient_rank}")
    stab = [i for i in range(len(W)) if W.act(i, mu) == mu]
    by_point: dict[Vector, list[int]] = {}
    for i in range(len(W)):
        by_point.setdefault(W.act(i, mu), []).append(i)
    cosets = []
    for point, members in by_point.items():
        rep = min(members, key=lambda i: _rep_order(W, i))
        cosets.append(Coset(rep=rep, members=tuple(members), point=point))
    cosets.sort(key=lambda c: _rep_order(W, c.rep))
    return stab, cosets


def weyl_order(family: str, rank: int) -> int:
    """Classical order formula, used for self-checks."""
    from math import factorial

    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    raise ConfigError(family)


def root_count(family: str, rank: int) -> int:
    if family == "A":
        return rank * (rank + 1)
    if family in ("B", "C"):
        return 2 * rank * rank
    if family == "D":
        return 2 * rank * (rank - 1)
    raise ConfigError(family)
