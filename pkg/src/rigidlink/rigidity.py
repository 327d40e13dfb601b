"""The generic 2-dimensional rigidity matroid via the (2,3) pebble game."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable

from .errors import InvalidArgumentError
from .graph import Edge, Graph, norm_edge
from .unionfind import UnionFind

PEBBLES = 2  # k: free pebbles per vertex
TIGHT = 3  # l: an edge needs l + 1 pebbles on its endpoints


class PebbleGame:
    """Incremental (2,3)-sparsity certificate.

    Every vertex starts with two pebbles. An accepted edge is oriented away
    from the vertex that paid a pebble for it, so ``pebbles[v] + outdeg(v) == 2``
    always holds. Vertices may be any hashable labels and are registered on
    first use.
    """

    def __init__(self, vertices: Iterable[Hashable] = ()):
        self.pebbles: dict = {}
        self.out: dict = {}
        self.accepted: list[Edge] = []
        self.rejected: list[Edge] = []
        self._accepted_set: set[Edge] = set()
        for v in vertices:
            self._touch(v)

    def _touch(self, v) -> None:
        if v not in self.pebbles:
            self.pebbles[v] = PEBBLES
            self.out[v] = set()

    def _fetch(self, start, blocked) -> bool:
        """Move one free pebble to ``start`` along a directed path avoiding ``blocked``."""
        parent = {start: None, blocked: None}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y in parent:
                    continue
                parent[y] = x
                if self.pebbles[y] > 0:
                    self.pebbles[y] -= 1
                    self.pebbles[start] += 1
                    while y != start:
                        x = parent[y]
                        self.out[x].discard(y)
                        self.out[y].add(x)
                        y = x
                    return True
                stack.append(y)
        return False

    def gather(self, u, v) -> int:
        """Collect as many pebbles as possible on u and v; return their total."""
        self._touch(u)
        self._touch(v)
        while self.pebbles[u] + self.pebbles[v] < 2 * PEBBLES:
            if self.pebbles[u] < PEBBLES and self._fetch(u, v):
                continue
            if self.pebbles[v] < PEBBLES and self._fetch(v, u):
                continue
            break
        return self.pebbles[u] + self.pebbles[v]

    def insert(self, u, v) -> bool:
        """Try to accept edge uv. Returns False (and records it) if dependent."""
        if u == v:
            raise InvalidArgumentError("loops are not allowed")
        e = norm_edge(u, v)
        if e in self._accepted_set:
            raise InvalidArgumentError(f"edge {e} is already accepted")
        if self.gather(u, v) > TIGHT:
            self.pebbles[u] -= 1
            self.out[u].add(v)
            self.accepted.append(e)
            self._accepted_set.add(e)
            return True
        self.rejected.append(e)
        return False

    def reach(self, sources: Iterable) -> set:
        seen = set(sources)
        stack = list(seen)
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def fundamental_circuit(self, u, v) -> frozenset[Edge]:
        """The unique circuit in accepted + uv, for a dependent non-accepted uv.

        After gathering three pebbles on u and v the vertices reachable from
        them span the smallest tight set containing both; its accepted edges
        plus uv form the circuit.
        """
        e = norm_edge(u, v)
        if e in self._accepted_set:
            raise InvalidArgumentError(f"edge {e} is accepted, so it has no fundamental circuit")
        if self.gather(u, v) > TIGHT:
            raise InvalidArgumentError(f"edge {e} is independent of the accepted set")
        span = self.reach((u, v))
        inside = frozenset(f for f in self.accepted if f[0] in span and f[1] in span)
        return inside | {e}

    def rank(self) -> int:
        return len(self.accepted)

    def check(self) -> None:
        for x, p in self.pebbles.items():
            assert 0 <= p <= PEBBLES and p + len(self.out[x]) == PEBBLES, x


def play(edges: Iterable[tuple]) -> PebbleGame:
    """Run the pebble game over ``edges`` in canonical (sorted) order."""
    game = PebbleGame()
    for u, v in sorted(norm_edge(*e) for e in edges):
        game.insert(u, v)
    return game


def rank_of_edges(edges: Iterable[tuple]) -> int:
    return play(edges).rank()


def r2_rank(G: Graph) -> int:
    return rank_of_edges(G.edges)


def is_r2_independent(G: Graph) -> bool:
    return r2_rank(G) == G.m


def rigid_rank(n: int) -> int:
    return max(2 * n - 3, 0)


def is_rigid_2d(G: Graph) -> bool:
    if G.n <= 1:
        return True
    return r2_rank(G) == 2 * G.n - 3


def is_redundantly_rigid_2d(G: Graph) -> bool:
    return is_rigid_2d(G) and not r2_bridges(G)


def fundamental_circuit(state: PebbleGame, e: tuple) -> frozenset[Edge]:
    return state.fundamental_circuit(*e)


@dataclass(frozen=True)
class R2Decomposition:
    """Partition of the edge set into connected components of R2(G).

    Components are sorted by their least edge. A component is trivial when it
    is a single edge, i.e. an R2-bridge.
    """

    components: tuple[frozenset[Edge], ...]
    trivial: tuple[bool, ...]
    vertex_sets: tuple[frozenset[int], ...]

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[Edge]]) -> R2Decomposition:
        comps = sorted((frozenset(c) for c in classes), key=min)
        return cls(
            components=tuple(comps),
            trivial=tuple(len(c) == 1 for c in comps),
            vertex_sets=tuple(frozenset(v for e in c for v in e) for c in comps),
        )

    def __len__(self) -> int:
        return len(self.components)

    def nontrivial(self) -> list[int]:
        return [i for i, t in enumerate(self.trivial) if not t]

    @property
    def bridges(self) -> frozenset[Edge]:
        return frozenset(e for c, t in zip(self.components, self.trivial) if t for e in c)

    def component_of(self, e: tuple) -> int:
        e = norm_edge(*e)
        for i, c in enumerate(self.components):
            if e in c:
                return i
        raise InvalidArgumentError(f"{e} is not an edge")

    def containing(self, vertices: Iterable[int]) -> list[int]:
        """Indices of non-trivial components whose vertex set contains all ``vertices``."""
        want = set(vertices)
        return [i for i in self.nontrivial() if want <= self.vertex_sets[i]]


def components_of_edges(edges: Iterable[tuple]) -> R2Decomposition:
    """Matroid components by fundamental-circuit closure over a pebble-game basis."""
    edges = sorted({norm_edge(*e) for e in edges})
    game = play(edges)
    circuits = [game.fundamental_circuit(*e) for e in game.rejected]
    classes = UnionFind(edges)
    merged = True
    while merged:
        merged = False
        for circuit in circuits:
            first = min(circuit)
            for f in circuit:
                merged |= classes.union(first, f)
    return R2Decomposition.from_classes(classes.groups())


def r2_components(G: Graph) -> R2Decomposition:
    return components_of_edges(G.edges)


def r2_bridges(G: Graph) -> frozenset[Edge]:
    return r2_components(G).bridges


def is_r2_connected(G: Graph) -> bool:
    """One component covering every edge, and at least one edge."""
    return G.m > 0 and len(r2_components(G)) == 1
