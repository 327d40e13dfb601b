"""Linear-algebra cross-checks: rigidity matrices at random realizations.

Coordinates are integers or :class:`fractions.Fraction`, never floats, so
ranks and edge-length comparisons are exact. Random integer coordinates
stand in for a generic realization; a rank computed there can only fall
short of the generic rank, never exceed it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

from .errors import InvalidArgumentError, PreconditionError
from .graph import Graph, components, norm_edge

COORD_RANGE = 2**31
MERSENNE_61 = 2**61 - 1

Point = tuple[Rational, ...]


@dataclass(frozen=True)
class Framework:
    graph: Graph
    dim: int
    positions: tuple[Point, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidArgumentError("dimension must be at least 1")
        if len(self.positions) != self.graph.n:
            raise InvalidArgumentError("need exactly one position per vertex")
        pos = []
        for p in self.positions:
            if len(p) != self.dim:
                raise InvalidArgumentError(f"position {p} does not have {self.dim} coordinates")
            pos.append(tuple(c if isinstance(c, Rational) else Fraction(c) for c in p))
        object.__setattr__(self, "positions", tuple(pos))

    def sqdist(self, u: int, v: int) -> Rational:
        return sum((a - b) ** 2 for a, b in zip(self.positions[u], self.positions[v]))

    def edge_lengths(self) -> list[Rational]:
        return [self.sqdist(u, v) for u, v in self.graph.edges]


def realize_random(G: Graph, d: int, seed: int) -> Framework:
    """Integer coordinates drawn uniformly from [-2**31, 2**31)."""
    if d < 1:
        raise InvalidArgumentError("dimension must be at least 1")
    rng = random.Random(seed)
    pos = tuple(tuple(rng.randrange(-COORD_RANGE, COORD_RANGE) for _ in range(d)) for _ in range(G.n))
    return Framework(G, d, pos)


def realize_collinear(G: Graph, seed: int = 0) -> Framework:
    """A deliberately degenerate planar realization: every point on y = 2x + 1."""
    rng = random.Random(seed)
    xs = [rng.randrange(-COORD_RANGE, COORD_RANGE) for _ in range(G.n)]
    return Framework(G, 2, tuple((x, 2 * x + 1) for x in xs))


@dataclass(frozen=True)
class RigidityMatrix:
    edges: tuple[tuple[int, int], ...]
    dim: int
    rows: tuple[tuple[Rational, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)


def rigidity_matrix(F: Framework) -> RigidityMatrix:
    d, n = F.dim, F.graph.n
    rows = []
    for u, v in F.graph.edges:
        row = [0] * (d * n)
        for i in range(d):
            diff = F.positions[u][i] - F.positions[v][i]
            row[d * u + i] = diff
            row[d * v + i] = -diff
        rows.append(tuple(row))
    return RigidityMatrix(F.graph.edges, d, tuple(rows))


def _integer_rows(rows: Iterable[Sequence[Rational]]) -> list[list[int]]:
    out = []
    for row in rows:
        scale = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * scale) for x in row])
    return out


def bareiss_rank(rows: Iterable[Sequence[Rational]]) -> int:
    """Exact rank by fraction-free Gaussian elimination over the integers."""
    m = [r for r in _integer_rows(rows) if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank]
        pc = p[col]
        for i in range(rank + 1, len(m)):
            r = m[i]
            rc = r[col]
            for j in range(col + 1, ncols):
                r[j] = (r[j] * pc - p[j] * rc) // prev
            r[col] = 0
        prev = pc
        rank += 1
        if rank == len(m):
            break
    return rank


def modular_rank(rows: Iterable[Sequence[Rational]], prime: int = MERSENNE_61) -> int:
    """Rank over GF(prime). Never exceeds the rational rank; equal unless
    ``prime`` divides a suitable minor, which is vanishingly unlikely for a
    61-bit prime and random integer data."""
    m = [[x % prime for x in r] for r in _integer_rows(rows)]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank]
        inv = pow(p[col], prime - 2, prime)
        for i in range(rank + 1, len(m)):
            r = m[i]
            f = r[col] * inv % prime
            if f:
                for j in range(col, ncols):
                    r[j] = (r[j] - f * p[j]) % prime
        rank += 1
        if rank == len(m):
            break
    return rank


def exact_rank(M: RigidityMatrix | Sequence[Sequence[Rational]], method: str = "bareiss") -> int:
    rows = M.rows if isinstance(M, RigidityMatrix) else M
    if method == "bareiss":
        return bareiss_rank(rows)
    if method == "modular":
        return modular_rank(rows)
    raise InvalidArgumentError(f"unknown rank method {method!r}")


def numeric_rank(G: Graph, d: int, seed: int, method: str = "bareiss") -> int:
    """Rank of the rigidity matrix of G at ``realize_random(G, d, seed)``."""
    return exact_rank(rigidity_matrix(realize_random(G, d, seed)), method)


def check_equivalent(F1: Framework, F2: Framework, tol: float = 0) -> bool:
    """Do the frameworks have the same squared edge lengths (within ``tol``)?"""
    if F1.graph != F2.graph or F1.dim != F2.dim:
        raise InvalidArgumentError("frameworks must share graph and dimension")
    for a, b in zip(F1.edge_lengths(), F2.edge_lengths()):
        if tol == 0:
            if a != b:
                return False
        elif abs(a - b) > tol:
            return False
    return True


def reflect_point(p: Point, a: Point, b: Point) -> Point:
    """Mirror image of p in the line through a and b (exact for rationals)."""
    wx, wy = Fraction(b[0] - a[0]), Fraction(b[1] - a[1])
    norm = wx * wx + wy * wy
    if norm == 0:
        raise PreconditionError("separator vertices coincide; the mirror line is undefined")
    dx, dy = p[0] - a[0], p[1] - a[1]
    t = (dx * wx + dy * wy) / norm
    return (a[0] + 2 * t * wx - dx, a[1] + 2 * t * wy - dy)


def reflect_refute(
    F: Framework, sep: tuple[int, int], side: Iterable[int], u: int, v: int
) -> Framework | None:
    """Reflect ``side`` across the line through the separator's points.

    Every edge stays inside ``side + sep`` or outside ``side``, so the result
    is equivalent to F. Returns it when the u-v distance changed, else None.
    """
    if F.dim != 2:
        raise PreconditionError("reflection refuter works in the plane only")
    G = F.graph
    a, b = sep
    G.check_vertex(a)
    G.check_vertex(b)
    comps = components(G.adj, (a, b))
    if a == b or len(comps) < 2:
        raise PreconditionError(f"{sep} is not a 2-separator")
    side = frozenset(side)
    chosen = [c for c in comps if c & side]
    if not side or side != frozenset().union(*chosen) or len(chosen) == len(comps):
        raise PreconditionError("side must be a union of some, but not all, components of G - sep")
    if (u in side) == (v in side) or u in sep or v in sep:
        raise PreconditionError("exactly one of u, v must lie in side, neither on the separator")
    pa, pb = F.positions[a], F.positions[b]
    pos = [reflect_point(p, pa, pb) if x in side else p for x, p in enumerate(F.positions)]
    out = Framework(G, 2, tuple(pos))
    if out.sqdist(u, v) == F.sqdist(u, v):
        return None
    return out


def separating_pair_between(G: Graph, u: int, v: int) -> tuple[tuple[int, int], frozenset[int]] | None:
    """First pair {a, b} (lexicographically) putting u and v in different
    components of G - {a, b}, with the component of u; None if there is none."""
    if G.has_edge(u, v):
        return None
    for a in range(G.n):
        for b in range(a + 1, G.n):
            if {a, b} & {u, v}:
                continue
            for c in components(G.adj, (a, b)):
                if u in c:
                    if v not in c:
                        return (a, b), c
                    break
    return None


def framework_to_json(F: Framework) -> dict:
    def fmt(x):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    return {
        "dim": F.dim,
        "edges": [list(norm_edge(*e)) for e in F.graph.edges],
        "positions": [[fmt(c) for c in p] for p in F.positions],
    }


def full_rank_target(n: int, d: int) -> int:
    """Rank of the rigidity matrix of K_n in general position in R^d."""
    if n <= d + 1:
        return n * (n - 1) // 2
    return d * n - d * (d + 1) // 2


def is_rigid_numeric(G: Graph, d: int, seed: int, method: str = "bareiss") -> bool:
    return numeric_rank(G, d, seed, method) == full_rank_target(G.n, d)
