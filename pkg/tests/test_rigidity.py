import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_k_connected, is_sparse, laman_rank, matroid_components
from rigidlink import generators as gen
from rigidlink.errors import InvalidArgumentError
from rigidlink.graph import Graph
from rigidlink.rigidity import (
    PebbleGame,
    components_of_edges,
    fundamental_circuit,
    is_r2_connected,
    is_r2_independent,
    is_redundantly_rigid_2d,
    is_rigid_2d,
    play,
    r2_bridges,
    r2_components,
    r2_rank,
    rank_of_edges,
)
from test_graph import graphs


class TestRank:
    def test_examples(self):
        assert r2_rank(gen.complete(3)) == 3
        assert r2_rank(gen.complete(4)) == 5
        assert r2_rank(gen.k33()) == 9

    def test_degenerate_sizes(self):
        assert r2_rank(Graph(0, ())) == 0
        assert r2_rank(Graph(1, ())) == 0
        assert is_rigid_2d(Graph(1, ()))
        assert is_rigid_2d(Graph(0, ()))
        assert not is_rigid_2d(Graph(2, ()))

    def test_independence(self):
        assert is_r2_independent(gen.complete(4).remove_edges([(0, 1)]))
        assert not is_r2_independent(gen.complete(4))
        assert is_r2_independent(Graph(0, ()))

    def test_rigidity(self):
        assert is_rigid_2d(gen.prism())
        assert not is_rigid_2d(gen.cycle(4))
        assert is_rigid_2d(gen.complete(4))

    def test_redundant_rigidity(self):
        assert is_redundantly_rigid_2d(gen.complete(4))
        assert not is_redundantly_rigid_2d(gen.prism())
        assert is_redundantly_rigid_2d(gen.wheel(4))

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=7))
    def test_matches_count_oracle(self, G):
        assert r2_rank(G) == laman_rank(frozenset(G.edges))

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9))
    def test_pebble_invariants(self, G):
        game = play(G.edges)
        game.check()
        for v in game.pebbles:
            assert game.pebbles[v] + len(game.out[v]) == 2
        assert is_sparse(game.accepted)
        assert len(game.accepted) + len(game.rejected) == G.m

    def test_edge_order_does_not_change_rank(self):
        rng = random.Random(3)
        for _ in range(30):
            G = gen.random_graph(9, 0.5, rng)
            edges = list(G.edges)
            rng.shuffle(edges)
            game = PebbleGame(range(G.n))
            for e in edges:
                game.insert(*e)
            assert game.rank() == r2_rank(G)

    def test_bridge_consistency(self):
        rng = random.Random(4)
        for _ in range(60):
            G = gen.random_graph(rng.randrange(3, 10), rng.choice([0.3, 0.5, 0.7]), rng)
            bridges = r2_bridges(G)
            full = r2_rank(G)
            for e in G.edges:
                assert (e in bridges) == (r2_rank(G.remove_edges([e])) == full - 1)


class TestCircuits:
    def _is_circuit(self, edges):
        edges = frozenset(edges)
        if laman_rank(edges) == len(edges):
            return False
        return all(laman_rank(edges - {e}) == len(edges) - 1 for e in edges)

    def test_k4(self):
        game = play(gen.complete(4).remove_edges([(2, 3)]).edges)
        assert fundamental_circuit(game, (2, 3)) == frozenset(gen.complete(4).edges)

    def test_prism_plus_chord(self):
        P = gen.prism()
        for u, v in combinations(range(6), 2):
            if P.has_edge(u, v):
                continue
            game = play(P.edges)
            C = fundamental_circuit(game, (u, v))
            assert (u, v) in C and self._is_circuit(C)

    def test_wheel(self):
        W = gen.wheel(4)
        game = play(W.remove_edges([(0, 1)]).edges)
        assert fundamental_circuit(game, (0, 1)) == frozenset(W.edges)

    def test_accepted_edge_rejected(self):
        game = play(gen.complete(3).edges)
        with pytest.raises(InvalidArgumentError):
            fundamental_circuit(game, (0, 1))
        with pytest.raises(InvalidArgumentError):
            fundamental_circuit(game, (0, 5))

    def test_random_circuits_are_minimal(self):
        rng = random.Random(6)
        seen = 0
        for _ in range(120):
            G = gen.random_graph(rng.randrange(4, 9), 0.6, rng)
            game = play(G.edges)
            for e in game.rejected:
                C = game.fundamental_circuit(*e)
                if len(C) <= 10:
                    assert self._is_circuit(C)
                    seen += 1
        assert seen > 50


class TestComponents:
    def test_two_k4(self):
        dec = r2_components(gen.two_k4())
        assert len(dec) == 1 and dec.components[0] == frozenset(gen.two_k4().edges)

    def test_two_triangles_at_vertex(self):
        dec = r2_components(gen.two_triangles_at_vertex())
        assert len(dec) == 6 and all(dec.trivial)

    def test_k4_pendant(self):
        dec = r2_components(gen.k4_pendant())
        assert dec.nontrivial() == [0]
        assert dec.components[0] == frozenset(gen.complete(4).edges)
        assert dec.bridges == {(3, 4)}

    def test_bridges(self):
        assert r2_bridges(gen.prism()) == frozenset(gen.prism().edges)
        assert r2_bridges(gen.complete(4)) == frozenset()
        assert r2_bridges(gen.k4_pendant()) == {(3, 4)}

    def test_r2_connected(self):
        assert is_r2_connected(gen.two_k4())
        assert not is_r2_connected(gen.k4_pendant())
        assert not is_r2_connected(Graph(3, ()))

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=7).filter(lambda G: G.m <= 10))
    def test_matches_separator_oracle(self, G):
        expected = sorted(map(sorted, matroid_components(G.edges, laman_rank)))
        assert sorted(map(sorted, r2_components(G).components)) == expected

    def test_component_laws(self):
        rng = random.Random(7)
        for _ in range(80):
            G = gen.random_graph(rng.randrange(4, 12), rng.choice([0.3, 0.4, 0.5, 0.6]), rng)
            dec = r2_components(G)
            assert sorted(e for c in dec.components for e in c) == list(G.edges)
            for i in dec.nontrivial():
                verts = dec.vertex_sets[i]
                C = Graph.from_edges(dec.components[i])
                sub = Graph(len(verts), tuple((sorted(verts).index(a), sorted(verts).index(b)) for a, b in C.edges))
                assert len(verts) >= 4
                assert brute_k_connected(sub, 2)
                assert is_redundantly_rigid_2d(sub)
            for i, j in combinations(range(len(dec)), 2):
                assert len(dec.vertex_sets[i] & dec.vertex_sets[j]) <= 1
            assert sum(rank_of_edges(c) for c in dec.components) == r2_rank(G)

    def test_adding_linked_pair_keeps_component_vertex_sets(self):
        rng = random.Random(8)
        tried = 0
        for _ in range(200):
            G = gen.random_graph(rng.randrange(5, 11), rng.choice([0.3, 0.5]), rng)
            dec = r2_components(G)
            for i in dec.nontrivial():
                for u, v in combinations(sorted(dec.vertex_sets[i]), 2):
                    if G.has_edge(u, v):
                        continue
                    after = r2_components(G.add_edges([(u, v)]))
                    assert sorted(map(sorted, after.vertex_sets)) == sorted(map(sorted, dec.vertex_sets))
                    assert after.vertex_sets[after.component_of((u, v))] == dec.vertex_sets[i]
                    tried += 1
        assert tried > 20

    def test_three_components_with_two_attachments(self):
        from rigidlink.decomposition import attachments
        from rigidlink.graph import adjacency_of

        rng = random.Random(9)
        seen = 0
        for _ in range(300):
            G = gen.random_graph(rng.randrange(6, 12), rng.choice([0.3, 0.4, 0.5]), rng)
            dec = r2_components(G)
            if len(dec) < 3:
                continue
            adj = adjacency_of(G.edges)
            few = [i for i in range(len(dec)) if len(attachments(dec.vertex_sets[i], adj)) <= 2]
            assert len(few) >= 3
            seen += 1
        assert seen > 100

    def test_single_pass_closure_matches_iteration(self):
        rng = random.Random(10)
        from rigidlink.unionfind import UnionFind

        for _ in range(80):
            G = gen.random_graph(rng.randrange(4, 12), rng.choice([0.3, 0.5, 0.7]), rng)
            game = play(G.edges)
            uf = UnionFind(G.edges)
            for e in game.rejected:
                C = game.fundamental_circuit(*e)
                for f in C:
                    uf.union(min(C), f)
            assert sorted(map(sorted, uf.groups())) == sorted(map(sorted, components_of_edges(G.edges).components))

