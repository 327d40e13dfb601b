"""Named graph families and seeded random instance builders."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, Multigraph, norm_edge


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def cycle(n: int) -> Graph:
    return Graph(n, tuple(norm_edge(i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def wheel(rim: int) -> Graph:
    """Cycle 0..rim-1 plus hub ``rim`` joined to every rim vertex."""
    if rim < 3:
        raise ValueError("a wheel needs at least 3 rim vertices")
    rim_edges = [norm_edge(i, (i + 1) % rim) for i in range(rim)]
    return Graph(rim + 1, tuple(rim_edges + [(i, rim) for i in range(rim)]))


def prism() -> Graph:
    """Triangles 012 and 345 joined by the bars 03, 14, 25."""
    return Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def k33() -> Graph:
    return Graph.from_edges((i, j) for i in range(3) for j in range(3, 6))


def two_k4() -> Graph:
    """Two K4s sharing the edge 01; the apexes are 2, 3 and 4, 5."""
    return Graph.from_edges(list(combinations([0, 1, 2, 3], 2)) + list(combinations([0, 1, 4, 5], 2)))


def k4_pendant() -> Graph:
    return Graph(5, complete(4).edges + ((3, 4),))


def two_triangles_at_vertex() -> Graph:
    return Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def k4_ring() -> Graph:
    """Six K4s forming three R2-components glued in a triangle.

    Component i consists of two K4s sharing an edge; the two corner vertices
    it shares with the other components sit in different K4s. Every K4 then
    meets its sibling in two vertices and another component in a third, so
    no ordering of the six vertex sets is 2-shellable.
    """
    corners = [0, 1, 2]
    edges = []
    nxt = 3
    for i in range(3):
        a, b = corners[i], corners[(i + 1) % 3]
        p, q, x, y = nxt, nxt + 1, nxt + 2, nxt + 3
        nxt += 4
        edges += combinations([a, p, q, x], 2)
        edges += combinations([b, p, q, y], 2)
    return Graph.from_edges(edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def random_circuit(rng: random.Random) -> Graph:
    """A small R2-circuit: K4, a wheel, or K3,4."""
    kind = rng.randrange(4)
    if kind == 0:
        return complete(4)
    if kind == 3:
        return Graph.from_edges((i, j) for i in range(3) for j in range(3, 7))
    return wheel(rng.randrange(4, 7))


def random_r2_connected(rng: random.Random, pieces: int | None = None) -> Graph:
    """Glue R2-circuits along vertex pairs, sometimes dropping a shared edge (2-sum).

    Gluing two R2-connected graphs along two vertices, or taking their 2-sum
    along a common edge, stays R2-connected; the result usually has several
    3-blocks.
    """
    pieces = pieces or rng.randrange(1, 6)
    first = random_circuit(rng)
    edges = set(first.edges)
    n = first.n
    for _ in range(pieces - 1):
        circ = random_circuit(rng)
        if rng.random() < 0.6:
            x, y = rng.choice(circ.edges)
        else:
            x, y = rng.sample(range(circ.n), 2)
        verts = sorted({v for e in edges for v in e})
        if rng.random() < 0.5:
            a, b = rng.choice(sorted(edges))
        else:
            a, b = rng.sample(verts, 2)
        relabel = {x: a, y: b}
        for w in range(circ.n):
            if w not in relabel:
                relabel[w] = n
                n += 1
        new = {norm_edge(relabel[s], relabel[t]) for s, t in circ.edges}
        ab = norm_edge(a, b)
        two_sum = ab in edges and ab in new and rng.random() < 0.3
        edges |= new
        if two_sum:
            edges.discard(ab)
    return Graph(n, tuple(edges))


def random_separated(rng: random.Random, p: float = 0.6) -> tuple[Graph, tuple[int, int], int, int]:
    """A random graph with a 2-separator {0, 1} splitting u from v.

    Two random sides share only the vertices 0 and 1; u is taken from the
    first side and v from the second.
    """
    s1 = rng.randrange(1, 5)
    s2 = rng.randrange(1, 5)
    left = [0, 1] + list(range(2, 2 + s1))
    right = [0, 1] + list(range(2 + s1, 2 + s1 + s2))
    edges = set()
    for side in (left, right):
        for e in combinations(side, 2):
            if rng.random() < p:
                edges.add(e)
        # every non-separator vertex touches the separator, so each side is non-trivial
        for w in side[2:]:
            edges.add((rng.choice([0, 1]), w))
    if rng.random() < 0.5:
        edges.add((0, 1))
    u = rng.choice(left[2:])
    v = rng.choice(right[2:])
    return Graph(2 + s1 + s2, tuple(edges)), (0, 1), u, v


def random_multigraph(
    rng: random.Random, max_vertices: int = 5, max_edges: int = 10, min_edges: int = 1, no_isolated: bool = True
) -> Multigraph:
    """Random loopless multigraph; by default every vertex has an incident edge."""
    while True:
        n = rng.randrange(2, max_vertices + 1)
        m = rng.randrange(max(min_edges, 1), max_edges + 1)
        edges = tuple(tuple(rng.sample(range(n), 2)) for _ in range(m))
        H = Multigraph(n, edges)
        if not no_isolated or all(H.degree(w) for w in range(n)):
            return H


def parallel_edges(count: int) -> Multigraph:
    return Multigraph(2, tuple((0, 1) for _ in range(count)))
