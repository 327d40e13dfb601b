"""Graph types and connectivity primitives.

Vertices are dense integer ids ``0..n-1``. Edges of a :class:`Graph` are
stored as sorted pairs ``(u, v)`` with ``u < v``. Most kernels here work on
plain adjacency dicts so that the decomposition code can run them on
subgraphs without relabelling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .errors import InvalidArgumentError, PreconditionError

Edge = tuple[int, int]
Adjacency = Mapping[int, "set[int] | frozenset[int]"]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple loopless undirected graph on vertices ``0..n-1``."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgumentError(f"negative vertex count {self.n}")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidArgumentError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidArgumentError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            e = norm_edge(u, v)
            if e in seen:
                raise InvalidArgumentError(f"parallel edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
        edges = [norm_edge(u, v) for u, v in edges]
        if n is None:
            n = 1 + max((v for e in edges for v in e), default=-1)
        return cls(n, tuple(set(edges)))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        return adjacency(self.n, self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        new = set(self.edges)
        new.update(norm_edge(u, v) for u, v in edges)
        return Graph(self.n, tuple(new))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        drop = {norm_edge(u, v) for u, v in edges}
        return Graph(self.n, tuple(e for e in self.edges if e not in drop))

    def edge_subgraph(self, edges: Iterable[tuple[int, int]]) -> Graph:
        """Same vertex ids, only the given edges."""
        return Graph(self.n, tuple(norm_edge(u, v) for u, v in edges))

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidArgumentError(f"vertex {v!r} is not in 0..{self.n - 1}")


@dataclass(frozen=True)
class Multigraph:
    """A loopless multigraph. Edge ids are the positions in ``edges``."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgumentError(f"negative vertex count {self.n}")
        out = []
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise InvalidArgumentError(f"edge {i} is a loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidArgumentError(f"edge {i} = {(u, v)} has an endpoint outside 0..{self.n - 1}")
            out.append(norm_edge(u, v))
        object.__setattr__(self, "edges", tuple(out))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, w: int) -> int:
        return sum((u == w) + (v == w) for u, v in self.edges)

    def incident(self, w: int) -> list[int]:
        return [i for i, (u, v) in enumerate(self.edges) if w in (u, v)]

    def without(self, edge_ids: Iterable[int]) -> Multigraph:
        drop = set(edge_ids)
        return Multigraph(self.n, tuple(e for i, e in enumerate(self.edges) if i not in drop))


@dataclass(frozen=True)
class VertexPartition:
    parts: tuple[frozenset[int], ...]
    n: int = field(default=-1)

    def __post_init__(self):
        parts = tuple(sorted((frozenset(p) for p in self.parts), key=lambda p: min(p) if p else -1))
        if any(not p for p in parts):
            raise InvalidArgumentError("empty part")
        covered = [v for p in parts for v in p]
        if len(covered) != len(set(covered)):
            raise InvalidArgumentError("parts are not disjoint")
        n = len(covered) if self.n < 0 else self.n
        if set(covered) != set(range(n)):
            raise InvalidArgumentError("parts do not cover the vertex set")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", n)

    @property
    def t(self) -> int:
        return len(self.parts)

    def part_of(self, v: int) -> int:
        for i, p in enumerate(self.parts):
            if v in p:
                return i
        raise InvalidArgumentError(f"vertex {v} not covered")

    def crossing_edges(self, H: Multigraph) -> int:
        """e_H(P): the number of edges of ``H`` joining distinct parts."""
        where = {v: i for i, p in enumerate(self.parts) for v in p}
        return sum(where[u] != where[v] for u, v in H.edges)


def adjacency(n: int, edges: Iterable[tuple[int, int]]) -> dict[int, frozenset[int]]:
    nbrs: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return {v: frozenset(s) for v, s in nbrs.items()}


def adjacency_of(edges: Iterable[tuple[int, int]]) -> dict[int, set[int]]:
    """Adjacency dict over the vertices spanned by ``edges``."""
    nbrs: dict[int, set[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
    return nbrs


def components(adj: Adjacency, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``adj`` minus ``removed``, sorted by least vertex."""
    gone = set(removed)
    seen = set(gone)
    out = []
    for s in sorted(adj):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        out.append(frozenset(comp))
    return out


def is_connected(adj: Adjacency, removed: Iterable[int] = ()) -> bool:
    return len(components(adj, removed)) <= 1


def local_connectivity(adj: Adjacency, u: int, v: int, limit: int | None = None) -> int:
    """Number of internally disjoint u-v paths, via unit vertex capacities.

    Every vertex other than ``u`` and ``v`` is split into an in/out pair joined
    by a unit arc. A direct edge ``uv`` contributes exactly one path. With
    ``limit`` the search stops as soon as that many paths are found.
    """
    direct = 1 if v in adj[u] else 0
    if limit is not None and direct >= limit:
        return direct
    # node ids: ("i", x) / ("o", x); u and v are not split
    cap: dict[tuple, dict[tuple, int]] = {}

    def arc(a, b):
        cap.setdefault(a, {}).setdefault(b, 0)
        cap.setdefault(b, {}).setdefault(a, 0)
        cap[a][b] += 1

    def out_node(x):
        return ("o", x) if x not in (u, v) else ("t", x)

    def in_node(x):
        return ("i", x) if x not in (u, v) else ("t", x)

    for x in adj:
        if x not in (u, v):
            arc(("i", x), ("o", x))
        for y in adj[x]:
            if {x, y} == {u, v}:
                continue
            arc(out_node(x), in_node(y))
    src, dst = ("t", u), ("t", v)
    if src not in cap or dst not in cap:
        return direct
    flow = 0
    while limit is None or flow + direct < limit:
        parent = {src: None}
        queue = deque([src])
        while queue and dst not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if dst not in parent:
            break
        b = dst
        while parent[b] is not None:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    return flow + direct


def kappa(G: Graph, u: int, v: int) -> int:
    """kappa_G(u, v): maximum number of internally vertex-disjoint u-v paths."""
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        raise InvalidArgumentError("kappa needs two distinct vertices")
    return local_connectivity(G.adj, u, v)


def separating_pairs(adj: Adjacency) -> list[Edge]:
    """All vertex pairs whose removal disconnects ``adj``, in lexicographic order."""
    verts = sorted(adj)
    return [(a, b) for a, b in combinations(verts, 2) if not is_connected(adj, (a, b))]


def is_two_connected(adj: Adjacency) -> bool:
    if len(adj) < 3:
        return False
    return is_connected(adj) and all(is_connected(adj, (x,)) for x in adj)


def two_separators(G: Graph) -> list[Edge]:
    """Every pair {a, b} such that G - {a, b} is disconnected.

    Raises :class:`PreconditionError` unless G is 2-connected.
    """
    if not is_two_connected(G.adj):
        raise PreconditionError("two_separators requires a 2-connected graph")
    return separating_pairs(G.adj)


def is_k_connected(G: Graph, k: int) -> bool:
    """True iff G has at least k+1 vertices and stays connected after deleting any < k vertices."""
    if k < 1:
        raise InvalidArgumentError("k must be at least 1")
    if G.n < k + 1:
        return False
    for size in range(k):
        for removed in combinations(range(G.n), size):
            if not is_connected(G.adj, removed):
                return False
    return True


def _check_separator(adj: Adjacency, s: tuple[int, int]) -> None:
    a, b = s
    if a == b or a not in adj or b not in adj or is_connected(adj, s):
        raise PreconditionError(f"{tuple(s)} is not a 2-separator")


def crossing(G: Graph, s1: tuple[int, int], s2: tuple[int, int]) -> bool:
    """True iff the two vertices of ``s1`` lie in different components of G - s2."""
    _check_separator(G.adj, s1)
    _check_separator(G.adj, s2)
    a, b = s1
    if a in s2 or b in s2:
        return False
    comps = components(G.adj, s2)
    return not any(a in c and b in c for c in comps)
