import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_k_connected
from rigidlink import generators as gen
from rigidlink.errors import InvalidArgumentError, ParseError, PreconditionError
from rigidlink.graph import (
    Graph,
    Multigraph,
    VertexPartition,
    components,
    crossing,
    is_k_connected,
    kappa,
    two_separators,
)
from rigidlink.io import GraphDocument, parse_document
from rigidlink.unionfind import UnionFind


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph(n, tuple(chosen))


def test_graph_rejects_loops_parallels_and_bad_endpoints():
    with pytest.raises(InvalidArgumentError):
        Graph(3, ((1, 1),))
    with pytest.raises(InvalidArgumentError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(InvalidArgumentError):
        Graph(3, ((0, 3),))


def test_multigraph_allows_parallel_edges_but_not_loops():
    H = Multigraph(2, ((0, 1), (1, 0), (0, 1)))
    assert H.m == 3 and H.degree(0) == 3
    assert H.incident(1) == [0, 1, 2]
    with pytest.raises(InvalidArgumentError):
        Multigraph(2, ((0, 0),))


def test_vertex_partition_validates_cover():
    P = VertexPartition((frozenset({0, 1}), frozenset({2})), 3)
    assert P.t == 2
    assert P.crossing_edges(Multigraph(3, ((0, 1), (1, 2), (0, 2), (1, 2)))) == 3
    with pytest.raises(InvalidArgumentError):
        VertexPartition((frozenset({0, 1}), frozenset({1, 2})), 3)
    with pytest.raises(InvalidArgumentError):
        VertexPartition((frozenset({0}),), 2)


def test_union_find_groups():
    uf = UnionFind(range(5))
    assert uf.union(0, 1) and uf.union(3, 4)
    assert not uf.union(1, 0)
    assert uf.connected(0, 1) and not uf.connected(1, 3)
    assert sorted(map(sorted, uf.groups())) == [[0, 1], [2], [3, 4]]


class TestKappa:
    def test_complete_graph(self):
        for u, v in combinations(range(4), 2):
            assert kappa(gen.complete(4), u, v) == 3

    def test_path_midpoint(self):
        assert kappa(gen.path(3), 0, 2) == 1

    def test_four_cycle_opposite(self):
        assert kappa(gen.cycle(4), 0, 2) == 2

    def test_same_vertex_is_rejected(self):
        with pytest.raises(InvalidArgumentError):
            kappa(gen.complete(3), 1, 1)

    @settings(max_examples=60, deadline=None)
    @given(graphs())
    def test_symmetric(self, G):
        for u, v in combinations(range(G.n), 2):
            assert kappa(G, u, v) == kappa(G, v, u)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=8))
    def test_menger_against_vertex_cuts(self, G):
        # kappa >= k iff no set of fewer than k other vertices separates u from v
        for u, v in combinations(range(G.n), 2):
            others = [w for w in range(G.n) if w not in (u, v)]
            direct = 1 if G.has_edge(u, v) else 0
            H = G.remove_edges([(u, v)]) if direct else G
            best = None
            for size in range(len(others) + 1):
                for cut in combinations(others, size):
                    comp_u = next(c for c in components(H.adj, cut) if u in c)
                    if v not in comp_u:
                        best = size
                        break
                if best is not None:
                    break
            expected = (best if best is not None else len(others)) + direct
            assert kappa(G, u, v) == expected


class TestSeparators:
    def test_two_triangles(self):
        assert two_separators(gen.complete(4).remove_edges([(2, 3)])) == [(0, 1)]

    def test_complete_has_none(self):
        assert two_separators(gen.complete(4)) == []

    def test_two_k4(self):
        assert two_separators(gen.two_k4()) == [(0, 1)]

    def test_requires_two_connected(self):
        with pytest.raises(PreconditionError):
            two_separators(gen.path(4))

    def test_matches_brute_force(self):
        rng = random.Random(5)
        checked = 0
        while checked < 40:
            G = gen.random_graph(rng.randrange(4, 12), rng.choice([0.3, 0.5, 0.7]), rng)
            if not brute_k_connected(G, 2):
                continue
            brute = [
                (a, b) for a, b in combinations(range(G.n), 2) if len(components(G.adj, (a, b))) > 1
            ]
            assert two_separators(G) == brute
            checked += 1

    def test_crossing(self):
        assert not crossing(gen.two_k4(), (0, 1), (0, 1))
        C = gen.cycle(6)
        assert crossing(C, (0, 3), (1, 4))
        assert not crossing(C, (0, 3), (1, 3))
        with pytest.raises(PreconditionError):
            crossing(gen.two_k4(), (0, 1), (2, 3))


class TestConnectivity:
    def test_examples(self):
        assert is_k_connected(gen.complete(4), 3)
        assert not is_k_connected(gen.cycle(4), 3)
        assert is_k_connected(gen.two_k4(), 2)
        assert not is_k_connected(gen.two_k4(), 3)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=7), st.integers(1, 3))
    def test_matches_brute_force(self, G, k):
        assert is_k_connected(G, k) == brute_k_connected(G, k)


class TestDocuments:
    def test_text_and_json_agree(self):
        text = "# a triangle\nn 3\n0 1\n1 2  # trailing comment\n\n0 2\n"
        a = parse_document(text)
        b = parse_document('{"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}')
        assert a.canonical() == b.canonical()
        assert a.to_graph() == gen.complete(3)

    def test_names_resolve(self):
        doc = parse_document("n 3\nnames x y z\n0 1\n")
        assert doc.vertex("z") == 2 and doc.vertex("1") == 1 and doc.name(0) == "x"
        with pytest.raises(InvalidArgumentError):
            doc.vertex("w")
        with pytest.raises(InvalidArgumentError):
            doc.vertex(3)

    @pytest.mark.parametrize(
        "text, line, column",
        [
            ("n 3\n0 1\n  2 2\n", 3, 3),
            ("n 3\n0 5\n", 2, 1),
            ("0 1\n", 1, 1),
            ("n 3\n0 1\n1 0\n", 3, 1),
            ("n 3\n0 x\n", 2, 3),
            ("n 2\nkind blob\n", 2, 6),
        ],
    )
    def test_parse_errors_carry_position(self, text, line, column):
        with pytest.raises(ParseError) as info:
            parse_document(text)
        assert (info.value.line, info.value.column) == (line, column)

    def test_bad_json(self):
        with pytest.raises(ParseError) as info:
            parse_document('{"n": 3,\n "edges": [[0, 1],, ]}')
        assert info.value.line == 2
        with pytest.raises(ParseError):
            parse_document('{"n": 2, "names": ["a", "a"], "edges": []}')

    def test_multigraph_allows_repeats(self):
        doc = parse_document("n 2\nkind multigraph\n0 1\n1 0\n0 1\n")
        assert doc.to_multigraph().m == 3

    @settings(max_examples=100, deadline=None)
    @given(
        st.integers(2, 8).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]), max_size=12),
                st.booleans(),
            )
        )
    )
    def test_round_trip(self, case):
        n, edges, named = case
        names = tuple(f"v{i}" for i in range(n)) if named else None
        doc = GraphDocument("multigraph", n, tuple(edges), names).canonical()
        assert parse_document(doc.to_json()).canonical() == doc
        assert parse_document(doc.to_text()).canonical() == doc
