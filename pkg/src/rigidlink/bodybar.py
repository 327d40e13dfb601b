"""Body-bar graphs and tree-connectivity of multigraphs.

The rank of the union of k cycle matroids is computed by the classical
matroid-partition augmenting-path method: an edge that fits in no forest
displaces an edge on the forest cycle it would close, which in turn looks
for a new home, and so on along a shortest exchange path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidArgumentError, PreconditionError
from .graph import Edge, Graph, Multigraph, VertexPartition, norm_edge
from .unionfind import UnionFind


class ForestPacking:
    """k edge-disjoint forests of maximum total size (a basis of M_k(H))."""

    def __init__(self, H: Multigraph, k: int, edge_ids=None):
        if k < 1:
            raise InvalidArgumentError("k must be at least 1")
        self.H = H
        self.k = k
        self.forest_of: dict[int, int] = {}
        self.forests: list[set[int]] = [set() for _ in range(k)]
        for e in range(H.m) if edge_ids is None else edge_ids:
            self.augment(e)

    @property
    def rank(self) -> int:
        return len(self.forest_of)

    def _forest_adj(self, i: int) -> dict[int, list[tuple[int, int]]]:
        adj: dict[int, list[tuple[int, int]]] = {}
        for e in self.forests[i]:
            a, b = self.H.edges[e]
            adj.setdefault(a, []).append((b, e))
            adj.setdefault(b, []).append((a, e))
        return adj

    @staticmethod
    def _tree_path(adj, x: int, y: int) -> list[int] | None:
        """Edge ids on the forest path from x to y, or None if disconnected."""
        if x not in adj or y not in adj:
            return None
        via = {x: None}
        queue = deque([x])
        while queue:
            a = queue.popleft()
            if a == y:
                break
            for b, e in adj[a]:
                if b not in via:
                    via[b] = (a, e)
                    queue.append(b)
        if y not in via:
            return None
        path = []
        while via[y] is not None:
            y, e = via[y]
            path.append(e)
        return path

    def augment(self, e: int) -> bool:
        """Insert edge e, shifting others along a shortest exchange path if needed."""
        adjs = [self._forest_adj(i) for i in range(self.k)]
        label: dict[int, tuple[int, int] | None] = {e: None}
        queue = deque([e])
        while queue:
            x = queue.popleft()
            a, b = self.H.edges[x]
            for i in range(self.k):
                if self.forest_of.get(x) == i:
                    continue
                path = self._tree_path(adjs[i], a, b)
                if path is None:
                    self._shift(x, i, label)
                    return True
                for f in path:
                    if f not in label:
                        label[f] = (x, i)
                        queue.append(f)
        return False

    def _shift(self, x: int, target: int, label) -> None:
        while True:
            old = self.forest_of.get(x)
            if old is not None:
                self.forests[old].discard(x)
            self.forests[target].add(x)
            self.forest_of[x] = target
            if label[x] is None:
                return
            x, target = label[x]


def matroid_union_rank(H: Multigraph, k: int) -> int:
    return ForestPacking(H, k).rank


def mk_bridges(H: Multigraph, k: int) -> frozenset[int]:
    """Edge ids that are coloops of M_k(H): deleting one drops the rank."""
    packing = ForestPacking(H, k)
    full = packing.rank
    out = set()
    for e in sorted(packing.forest_of):
        rest = [f for f in range(H.m) if f != e]
        if ForestPacking(H, k, rest).rank == full - 1:
            out.add(e)
    return frozenset(out)


@dataclass(frozen=True)
class SuperbrickPartition:
    parts: VertexPartition
    bridges: frozenset[int]

    def part_of(self, w: int) -> frozenset[int]:
        return self.parts.parts[self.parts.part_of(w)]


def superbricks(H: Multigraph, k: int) -> SuperbrickPartition:
    """k-superbricks: connected components of H after deleting the M_k-bridges."""
    F = mk_bridges(H, k)
    uf = UnionFind(range(H.n))
    for i, (a, b) in enumerate(H.edges):
        if i not in F:
            uf.union(a, b)
    parts = VertexPartition(tuple(frozenset(g) for g in uf.groups()), H.n)
    return SuperbrickPartition(parts, F)


def is_k_tree_connected(H: Multigraph, k: int) -> bool:
    """k edge-disjoint spanning trees exist."""
    if H.n <= 1:
        if k < 1:
            raise InvalidArgumentError("k must be at least 1")
        return True
    return matroid_union_rank(H, k) == k * (H.n - 1)


def is_highly_k_tree_connected(H: Multigraph, k: int) -> bool:
    """Still k-tree-connected after deleting any single edge (K1 counts as yes)."""
    if k < 1:
        raise InvalidArgumentError("k must be at least 1")
    if H.n <= 1:
        return True
    if H.m == 0:
        return False
    return all(is_k_tree_connected(H.without([e]), k) for e in range(H.m))


@dataclass(frozen=True)
class BodyBarGraph:
    """G_H: one complete body per host vertex, one bar per host edge.

    ``slots[x] = (w, e)`` says vertex x of G_H sits in the body of w and is the
    end of the bar for host edge e. ``bars[e]`` is that bar as an edge of G_H.
    """

    graph: Graph
    slots: tuple[tuple[int, int], ...]
    bars: tuple[Edge, ...]
    host: Multigraph

    def body(self, w: int) -> list[int]:
        return [x for x, (h, _) in enumerate(self.slots) if h == w]

    def host_of(self, x: int) -> int:
        return self.slots[x][0]


def body_bar_construct(H: Multigraph) -> BodyBarGraph:
    """Vertices are numbered body by body (host vertex order), slots by edge id."""
    slots = []
    where: dict[tuple[int, int], int] = {}
    for w in range(H.n):
        for e in H.incident(w):
            where[(w, e)] = len(slots)
            slots.append((w, e))
    edges = set()
    for w in range(H.n):
        body = [where[(w, e)] for e in H.incident(w)]
        edges.update(combinations(body, 2))
    bars = tuple(norm_edge(where[(a, e)], where[(b, e)]) for e, (a, b) in enumerate(H.edges))
    edges.update(bars)
    return BodyBarGraph(Graph(len(slots), tuple(edges)), tuple(slots), bars, H)


def bodybar_k(d: int) -> int:
    """Number of spanning trees matching dimension d: d(d+1)/2."""
    if d < 1:
        raise PreconditionError("dimension must be at least 1")
    return d * (d + 1) // 2


def _check_size(H: Multigraph, d: int) -> None:
    if H.n < 2 or H.m < 2:
        raise PreconditionError("body-bar rigidity needs at least 2 host vertices and 2 edges")
    bodybar_k(d)


def is_rigid_bodybar(H: Multigraph, d: int) -> bool:
    _check_size(H, d)
    return is_k_tree_connected(H, bodybar_k(d))


def is_globally_rigid_bodybar(H: Multigraph, d: int) -> bool:
    _check_size(H, d)
    return is_highly_k_tree_connected(H, bodybar_k(d))


def is_globally_linked_bodybar(
    H: Multigraph, d: int, u: int, v: int, bb: BodyBarGraph | None = None, bricks: SuperbrickPartition | None = None
) -> bool:
    """Is the pair {u, v} of G_H globally linked in R^d?

    True for bars and body edges, otherwise iff both host vertices lie in
    one d(d+1)/2-superbrick. ``bb`` and ``bricks`` may be passed to reuse work
    across many pairs.
    """
    bb = bb or body_bar_construct(H)
    bb.graph.check_vertex(u)
    bb.graph.check_vertex(v)
    if u == v:
        raise InvalidArgumentError("a pair needs two distinct vertices")
    if bb.graph.has_edge(u, v):
        return True
    bricks = bricks or superbricks(H, bodybar_k(d))
    return bb.host_of(v) in bricks.part_of(bb.host_of(u))
