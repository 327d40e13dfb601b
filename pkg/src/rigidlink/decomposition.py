"""3-blocks, globally linked pairs and clusters in the plane.

A pair {u, v} is globally linked in G in the plane exactly when uv is an
edge or some non-trivial R2-component H contains both with
kappa_H(u, v) >= 3. Everything else in this module is built on that test
and on the 3-block structure of R2-connected graphs.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidArgumentError, OracleDisagreement, PreconditionError
from .graph import (
    Edge,
    Graph,
    adjacency_of,
    components,
    is_k_connected,
    local_connectivity,
    norm_edge,
    separating_pairs,
)
from .rigidity import R2Decomposition, components_of_edges, r2_components, rank_of_edges


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: frozenset[Edge]
    virtual: frozenset[Edge]


@dataclass(frozen=True)
class ThreeBlockTree:
    """3-blocks of an R2-connected graph H.

    ``separators`` maps each 2-separator {a, b} of H to h(ab), the number of
    blocks containing both a and b. Separator pairs that are not edges of H
    appear in the blocks as virtual edges.
    """

    host: frozenset[Edge]
    blocks: tuple[Block, ...]
    separators: dict[Edge, int] = field(hash=False)

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def k(self) -> int:
        return sum(h - 1 for h in self.separators.values())

    @property
    def virtual_edges(self) -> dict[Edge, int]:
        return {s: h for s, h in self.separators.items() if s not in self.host}

    def tree_edges(self) -> list[tuple[int, Edge]]:
        """Incidences (block index, separator) of the block/separator tree."""
        return [
            (i, s)
            for s in sorted(self.separators)
            for i, blk in enumerate(self.blocks)
            if s[0] in blk.vertices and s[1] in blk.vertices
        ]

    def shelling(self, designated: tuple[int, int] | None = None) -> list[int]:
        """A 2-shellable ordering of the blocks whose first block induces ``designated``.

        Breadth-first traversal of the block/separator tree: every block is
        reached through one separator, and by the tree property that pair is
        all it shares with the blocks before it.
        """
        if designated is None:
            start = 0
        else:
            a, b = designated
            start = next(
                (i for i, blk in enumerate(self.blocks) if a in blk.vertices and b in blk.vertices),
                None,
            )
            if start is None:
                raise InvalidArgumentError(f"{designated} is not induced by any block")
        by_block: dict[int, list[Edge]] = {}
        by_sep: dict[Edge, list[int]] = {}
        for i, s in self.tree_edges():
            by_block.setdefault(i, []).append(s)
            by_sep.setdefault(s, []).append(i)
        order = [start]
        seen_blocks = {start}
        seen_seps = set()
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for s in by_block.get(i, ()):
                if s in seen_seps:
                    continue
                seen_seps.add(s)
                for j in by_sep[s]:
                    if j not in seen_blocks:
                        seen_blocks.add(j)
                        order.append(j)
                        queue.append(j)
        return order


def _require_r2_connected(edges: frozenset[Edge]) -> None:
    verts = {v for e in edges for v in e}
    if len(verts) < 4:
        raise PreconditionError("3-blocks need an R2-connected graph on at least 4 vertices")
    if len(components_of_edges(edges)) != 1:
        raise PreconditionError("3-blocks need an R2-connected graph")


def cleave_edges(
    edges: Iterable[Edge], sep: tuple[int, int], side: Iterable[int]
) -> tuple[frozenset[Edge], frozenset[Edge]]:
    """Split along {a, b}: H[side + ab] + ab and (H - side) + ab, one copy of ab each."""
    a, b = sep
    side = frozenset(side)
    ab = norm_edge(a, b)
    left = {ab}
    right = {ab}
    for e in edges:
        if e[0] in side or e[1] in side:
            left.add(e)
        else:
            right.add(e)
    return frozenset(left), frozenset(right)


def cleave(H: Graph, sep: tuple[int, int], side: Iterable[int]) -> tuple[Graph, Graph]:
    """Cleave H along the 2-separator ``sep``; ``side`` is a union of some,
    but not all, components of H - sep."""
    comps = components(adjacency_of(H.edges), sep)
    side = frozenset(side)
    chosen = [c for c in comps if c & side]
    if len(comps) < 2 or not side or side != frozenset().union(*chosen) or len(chosen) == len(comps):
        raise PreconditionError("side must be a union of some, but not all, components of H - sep")
    left, right = cleave_edges(H.edges, sep, side)
    return H.edge_subgraph(left), H.edge_subgraph(right)


def _split_choice(adj) -> tuple[Edge, frozenset[int]] | None:
    """The 2-separator whose smallest side is least by (size, sorted vertices)."""
    best = None
    for s in separating_pairs(adj):
        side = min(components(adj, s), key=lambda c: (len(c), sorted(c)))
        key = (len(side), sorted(side), s)
        if best is None or key < best[0]:
            best = (key, s, side)
    return None if best is None else (best[1], best[2])


def blocks_of_edges(edges: Iterable[Edge]) -> ThreeBlockTree:
    edges = frozenset(norm_edge(*e) for e in edges)
    _require_r2_connected(edges)
    seps = separating_pairs(adjacency_of(edges))
    pieces = [edges | frozenset(seps)]
    found = []
    while pieces:
        piece = pieces.pop()
        adj = adjacency_of(piece)
        choice = _split_choice(adj)
        if choice is None:
            if len(adj) < 4:
                raise OracleDisagreement(f"cleaving produced a piece on {len(adj)} vertices")
            found.append(piece)
            continue
        sep, side = choice
        left, right = cleave_edges(piece, sep, side)
        pieces.extend((right, left))
    blocks = []
    for piece in found:
        verts = frozenset(v for e in piece for v in e)
        blocks.append(Block(verts, piece, frozenset(e for e in piece if e not in edges)))
    blocks.sort(key=lambda blk: sorted(blk.vertices))
    mult = {
        s: sum(s[0] in blk.vertices and s[1] in blk.vertices for blk in blocks) for s in seps
    }
    return ThreeBlockTree(edges, tuple(blocks), mult)


def three_blocks(H: Graph) -> ThreeBlockTree:
    """3-blocks of an R2-connected graph (isolated vertices of H are ignored)."""
    return blocks_of_edges(H.edges)


def _check_pair(G: Graph, u: int, v: int) -> None:
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        raise InvalidArgumentError("a pair needs two distinct vertices")


def linked_witness(G: Graph, u: int, v: int, dec: R2Decomposition | None = None) -> int | None:
    """Index of an R2-component certifying that {u, v} is globally 2-linked, or None.

    For an edge uv the witness is the component containing it.
    """
    _check_pair(G, u, v)
    dec = dec or r2_components(G)
    if G.has_edge(u, v):
        return dec.component_of((u, v))
    for i in dec.containing((u, v)):
        if local_connectivity(adjacency_of(dec.components[i]), u, v, limit=3) >= 3:
            return i
    return None


def is_globally_linked_2d(G: Graph, u: int, v: int) -> bool:
    return linked_witness(G, u, v) is not None


def is_globally_linked_1d(G: Graph, u: int, v: int) -> bool:
    _check_pair(G, u, v)
    return G.has_edge(u, v) or local_connectivity(G.adj, u, v, limit=2) >= 2


def linked_nonadjacent_pairs(G: Graph, dec: R2Decomposition | None = None) -> list[Edge]:
    """Non-adjacent globally 2-linked pairs, sorted."""
    dec = dec or r2_components(G)
    pairs = set()
    for i in dec.nontrivial():
        adj = adjacency_of(dec.components[i])
        for u, v in combinations(sorted(dec.vertex_sets[i]), 2):
            if not G.has_edge(u, v) and local_connectivity(adj, u, v, limit=3) >= 3:
                pairs.add((u, v))
    return sorted(pairs)


def globally_linked_closure(G: Graph) -> Graph:
    """glc2(G): G plus every non-adjacent globally 2-linked pair."""
    return G.add_edges(linked_nonadjacent_pairs(G))


def is_shellable(sets: Sequence[Iterable[int]], order: Sequence[int], m: int) -> bool:
    """Does ``order`` meet each earlier union in at most m vertices?"""
    union: set[int] = set()
    for j, i in enumerate(order):
        s = set(sets[i])
        if j > 0 and len(union & s) > m:
            return False
        union |= s
    return True


def shellable_ordering(sets: Sequence[Iterable[int]], m: int) -> list[int] | None:
    """An m-shellable permutation of ``sets`` or None if none exists.

    Exhaustive depth-first search; the union of a prefix depends only on
    which sets it uses, so dead prefixes are memoised by that subset.
    """
    sets = [frozenset(s) for s in sets]
    p = len(sets)
    if p == 0:
        return []
    dead: set[int] = set()

    def extend(used: int, union: frozenset[int], order: list[int]) -> list[int] | None:
        if len(order) == p:
            return order
        if used in dead:
            return None
        for i in range(p):
            if used >> i & 1:
                continue
            if order and len(union & sets[i]) > m:
                continue
            found = extend(used | 1 << i, union | sets[i], order + [i])
            if found is not None:
                return found
        dead.add(used)
        return None

    return extend(0, frozenset(), [])


def attachments(component: frozenset[int], adj) -> frozenset[int]:
    """Vertices of ``component`` with a neighbour outside it."""
    return frozenset(x for x in component if any(y not in component for y in adj.get(x, ())))


@dataclass(frozen=True)
class ClusterCover:
    """Globally 2-linked clusters of size >= 4 with the cover identity terms.

    ``ordering`` lists cluster indices in a 3-shellable order.
    """

    clusters: tuple[frozenset[int], ...]
    uncovered: frozenset[Edge]
    multiplicities: dict[Edge, int] = field(hash=False)
    ordering: tuple[int, ...]
    rank: int

    @property
    def cluster_rank_sum(self) -> int:
        return sum(2 * len(c) - 3 for c in self.clusters)

    @property
    def overlap_excess(self) -> int:
        return sum(h - 1 for h in self.multiplicities.values())

    @property
    def identity_rhs(self) -> int:
        return len(self.uncovered) + self.cluster_rank_sum - self.overlap_excess

    @property
    def tight_holds(self) -> bool:
        return self.rank == self.identity_rhs


def _three_shelling(dec: R2Decomposition, trees: dict[int, ThreeBlockTree], index: dict) -> list[int]:
    """Peel components with at most two attachment vertices, then replay in reverse."""
    remaining = list(dec.nontrivial())
    peeled = []
    while remaining:
        adj = adjacency_of(e for i in remaining for e in dec.components[i])
        for i in remaining:
            att = attachments(dec.vertex_sets[i], adj)
            if len(att) <= 2:
                break
        else:
            raise OracleDisagreement("no R2-component with at most two attachment vertices")
        peeled.append((i, att))
        remaining.remove(i)
    order = []
    for i, att in reversed(peeled):
        comp = dec.components[i]
        if att:
            x = min(att)
            designated = min(e for e in comp if x in e)
        else:
            designated = min(comp)
        tree = trees[i]
        order.extend(index[tree.blocks[j].vertices] for j in tree.shelling(designated))
    return order


def globally_linked_clusters(G: Graph) -> ClusterCover:
    """Clusters are the vertex sets of the R2-blocks; F is the set of R2-bridges."""
    dec = r2_components(G)
    trees = {i: blocks_of_edges(dec.components[i]) for i in dec.nontrivial()}
    clusters = sorted({blk.vertices for tree in trees.values() for blk in tree.blocks}, key=sorted)
    index = {c: i for i, c in enumerate(clusters)}
    uncovered = frozenset(e for e in G.edges if not any(e[0] in c and e[1] in c for c in clusters))
    counts = Counter(p for c in clusters for p in combinations(sorted(c), 2))
    mult = {p: h for p, h in sorted(counts.items()) if h >= 2}
    order = _three_shelling(dec, trees, index)
    cover = ClusterCover(tuple(clusters), uncovered, mult, tuple(order), rank_of_edges(G.edges))
    if not cover.tight_holds:
        raise OracleDisagreement(f"cover identity fails: {cover.rank} != {cover.identity_rhs}")
    if sorted(order) != list(range(len(clusters))) or not is_shellable(clusters, order, 3):
        raise OracleDisagreement("constructed cluster ordering is not 3-shellable")
    return cover


def global_rigidity_failure(G: Graph) -> str | None:
    """None if G is globally rigid in the plane, else the first failing condition."""
    if G.n <= 3:
        return None if G.m == G.n * (G.n - 1) // 2 else "not complete"
    if not is_k_connected(G, 3):
        return "not 3-connected"
    if len(r2_components(G)) != 1 or G.m == 0:
        return "not R2-connected"
    return None


def is_globally_rigid_2d(G: Graph) -> bool:
    return global_rigidity_failure(G) is None


def uniquely_localizable(G: Graph, anchors: Iterable[int], v: int) -> bool:
    """Is v pinned down by the anchor positions in every generic planar realization?"""
    P = sorted(set(anchors))
    for b in P:
        G.check_vertex(b)
    G.check_vertex(v)
    if v in P:
        raise InvalidArgumentError("the target must not be an anchor")
    if len(P) < 3:
        return False
    full = G.add_edges(combinations(P, 2))
    dec = r2_components(full)
    for i in dec.containing(P + [v]):
        adj = adjacency_of(dec.components[i])
        if all(local_connectivity(adj, v, b, limit=3) >= 3 for b in P):
            return True
    return False
