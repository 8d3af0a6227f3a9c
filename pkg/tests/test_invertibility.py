from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from invcover.core import Hypergraph
from invcover.invertibility import (
    BipartiteCompatibilityGraph,
    build_compatibility_graph,
    find_deficiency_set,
    find_inverting_permutation,
    is_invertibility_critical,
    is_invertible,
    maximum_matching,
    non_critical_witness_edge,
)

from oracles import brute_force_invertible, random_hypergraph


class TestCompatibilityGraph:
    def test_tight_single_edge_has_empty_adjacency(self, single_edge_small):
        g = build_compatibility_graph(single_edge_small)
        assert g.pairs() == frozenset()

    def test_edgeless_is_complete(self):
        g = build_compatibility_graph(Hypergraph(["a", "b"], []))
        assert len(g.pairs()) == 4

    def test_spare_vertex_sees_everything(self):
        h = Hypergraph(["a", "b", "c"], [["a", "b"]])
        g = build_compatibility_graph(h)
        assert g.neighbors("c") == frozenset({"a", "b", "c"})
        assert g.neighbors("a") == frozenset({"c"})

    def test_adjacency_is_symmetric(self):
        rng = random.Random(7)
        for _ in range(50):
            h = random_hypergraph(rng, max_vertices=6, max_edges=5)
            g = build_compatibility_graph(h)
            for x in h.vertices:
                for y in h.vertices:
                    assert g.adjacent(x, y) == g.adjacent(y, x)


class TestMaximumMatching:
    def test_empty_adjacency(self):
        g = BipartiteCompatibilityGraph(labels=("a", "b"), adj=(0, 0))
        assert maximum_matching(g).size == 0

    def test_complete_three_by_three(self):
        g = BipartiteCompatibilityGraph(labels=("a", "b", "c"), adj=(7, 7, 7))
        assert maximum_matching(g).size == 3

    def test_shared_right_vertex(self):
        g = BipartiteCompatibilityGraph(labels=("a", "b"), adj=(1, 1))
        assert maximum_matching(g).size == 1

    def test_matching_is_deterministic(self):
        g = BipartiteCompatibilityGraph(labels=("a", "b", "c"), adj=(3, 7, 1))
        assert maximum_matching(g) == maximum_matching(g)

    def test_pairs_are_edges(self):
        rng = random.Random(3)
        for _ in range(30):
            h = random_hypergraph(rng, max_vertices=6, max_edges=5)
            g = build_compatibility_graph(h)
            for x, y in maximum_matching(g).pairs:
                assert g.adjacent(x, y)


class TestIsInvertible:
    def test_roomy_single_edge(self, single_edge_roomy):
        assert is_invertible(single_edge_roomy)

    def test_tight_single_edge(self, single_edge_small):
        assert not is_invertible(single_edge_small)

    def test_padded_triangle(self, triangle_critical):
        assert not is_invertible(triangle_critical)

    def test_agrees_with_brute_force_small(self):
        rng = random.Random(11)
        for _ in range(150):
            h = random_hypergraph(rng, max_vertices=5, max_edges=5)
            assert is_invertible(h) == brute_force_invertible(h)


class TestFindInvertingPermutation:
    def test_found_permutation_inverts(self, single_edge_roomy):
        pi = find_inverting_permutation(single_edge_roomy)
        assert pi is not None and pi.inverts(single_edge_roomy)

    def test_edgeless_any_permutation(self):
        h = Hypergraph(["a", "b"], [])
        pi = find_inverting_permutation(h)
        assert pi is not None and pi.inverts(h)

    def test_absent_when_not_invertible(self, single_edge_small):
        assert find_inverting_permutation(single_edge_small) is None

    def test_random_found_permutations_invert(self):
        rng = random.Random(23)
        for _ in range(100):
            h = random_hypergraph(rng)
            pi = find_inverting_permutation(h)
            if pi is not None:
                assert pi.inverts(h)


class TestDeficiencySet:
    def test_tight_single_edge(self, single_edge_small):
        ds = find_deficiency_set(single_edge_small)
        assert ds is not None
        assert ds.vertices == frozenset({"a", "b"})
        assert ds.neighborhood == frozenset()

    def test_absent_on_invertible(self, single_edge_roomy):
        assert find_deficiency_set(single_edge_roomy) is None

    def test_padded_triangle_off_by_one(self, triangle_critical):
        ds = find_deficiency_set(triangle_critical)
        assert ds is not None
        assert len(ds.neighborhood) == len(ds.vertices) - 1

    def test_witness_recomputes_from_graph(self):
        rng = random.Random(5)
        for _ in range(100):
            h = random_hypergraph(rng, max_vertices=6, max_edges=5)
            ds = find_deficiency_set(h)
            if ds is None:
                assert is_invertible(h)
                continue
            g = build_compatibility_graph(h)
            recomputed = frozenset().union(
                *(g.neighbors(x) for x in ds.vertices)
            ) if ds.vertices else frozenset()
            assert recomputed == ds.neighborhood
            assert len(recomputed) < len(ds.vertices)


class TestCriticality:
    def test_padded_triangle_is_critical(self, triangle_critical):
        assert is_invertibility_critical(triangle_critical)

    def test_invertible_is_not_critical(self, single_edge_roomy):
        assert not is_invertibility_critical(single_edge_roomy)

    def test_tight_single_edge_is_critical(self, single_edge_small):
        assert is_invertibility_critical(single_edge_small)

    def test_witness_edge_for_non_critical(self):
        h = Hypergraph(["a", "b", "c"], [["a", "b", "c"], ["a", "b"]])
        assert not is_invertible(h)
        assert not is_invertibility_critical(h)
        edge = non_critical_witness_edge(h)
        assert edge is not None
        assert not is_invertible(h.without_edge(edge))

    def test_witness_edge_absent_for_invertible(self, single_edge_roomy):
        assert non_critical_witness_edge(single_edge_roomy) is None


@st.composite
def hypergraphs(draw):
    n = draw(st.integers(min_value=2, max_value=5))
    labels = [f"v{i}" for i in range(n)]
    edges = draw(
        st.lists(st.sets(st.sampled_from(labels), min_size=1), max_size=5)
    )
    return Hypergraph(labels, edges)


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_invertibility_preserved_by_edge_removal(h):
    if is_invertible(h):
        for e in h.edges:
            assert is_invertible(h.without_edge(e))


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_matching_oracle_equivalence(h):
    assert is_invertible(h) == brute_force_invertible(h)
