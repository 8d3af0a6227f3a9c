from __future__ import annotations

import itertools
import random

import pytest

from invcover.core import DomainError
from invcover.cover import (
    CoverFamily,
    HostGraph,
    all_pairs_cover,
    is_isomorphic,
    is_minimal_edge_cover,
)
from invcover.constructions import lower_bound_cover
from invcover.invertibility import bipartite_matching_size, is_invertibility_critical
from invcover.search import (
    BudgetExhausted,
    GeneralCoverInstance,
    SearchConfig,
    chain_check,
    encode_edge_cover_as_general,
    encode_perfect_matching,
    satisfies_general_cover,
    search_b,
    search_c,
    search_i,
    solve_general_cover,
    twin_part_bound,
)

from oracles import brute_force_general_cover


class TestSearchB:
    def test_degree_one(self):
        out = search_b(1)
        assert out.best == 1 and out.exhaustive

    def test_degree_two_with_documented_caps(self):
        out = search_b(2, SearchConfig(max_members=4, max_part_size=10))
        assert out.best == 4
        assert out.exhaustive
        assert is_minimal_edge_cover(out.witness)
        assert is_isomorphic(out.witness, lower_bound_cover(2))

    def test_degree_three_seeded(self):
        out = search_b(3, SearchConfig(budget_secs=3.0))
        assert out.best >= 10
        assert not out.exhaustive
        assert is_minimal_edge_cover(out.witness)

    def test_witnesses_all_verified(self):
        out = search_b(2, SearchConfig(max_members=4, max_part_size=10))
        for w in out.witnesses:
            assert is_minimal_edge_cover(w)
            assert len(w.members) == 4

    def test_twin_cap_documented_value(self):
        assert twin_part_bound(2, 4) == 10

    def test_rejects_degree_zero(self):
        with pytest.raises(DomainError):
            search_b(0)


class TestSearchC:
    def test_degree_one(self):
        out = search_c(1)
        assert out.best == 1 and out.exhaustive

    def test_degree_two(self):
        out = search_c(2)
        assert out.best == 3
        assert out.exhaustive
        for w in out.witnesses:
            assert is_minimal_edge_cover(w)
            assert not w.host.is_bipartite()
            assert w.max_degree() <= 2

    def test_degree_three_seeded(self):
        out = search_c(3, SearchConfig(budget_secs=2.0))
        assert out.best >= 6  # parts adjoined to the level-2 construction


@pytest.fixture(scope="module")
def i2_outcome():
    return search_i(2, SearchConfig(max_members=4, max_vertices=9))


class TestSearchI:
    def test_degree_one(self):
        out = search_i(1)
        assert out.best == 1 and out.exhaustive
        assert is_invertibility_critical(out.witness)

    def test_degree_two_documented_caps(self, i2_outcome):
        out = i2_outcome
        assert out.best == 3
        assert not out.exhaustive
        assert any("caps" in note for note in out.notes)
        assert is_invertibility_critical(out.witness)

    def test_seed_is_padded_triangle(self, i2_outcome):
        out = i2_outcome
        assert len(out.witness.edges) == 3
        assert len(out.witness.vertices) == 5


class TestChain:
    def test_degree_two_chain(self):
        rep = chain_check(2)
        assert (rep.c_d, rep.i_d, rep.b_d) == (3, 3, 4)
        assert rep.c_next >= 4
        assert rep.holds


class TestTwinReduction:
    def test_deleting_a_twin_preserves_minimality(self):
        rng = random.Random(404)
        checked = 0
        while checked < 500:
            cover, twin_pair = _random_cover_with_twin(rng)
            reduced = _delete_vertex(cover, twin_pair[1])
            assert is_minimal_edge_cover(cover) == is_minimal_edge_cover(reduced)
            checked += 1


def _random_cover_with_twin(rng: random.Random):
    n1, n2 = rng.randint(1, 3), rng.randint(1, 3)
    part1 = [f"u{i}" for i in range(n1)]
    part2 = [f"v{i}" for i in range(n2)]
    vs = part1 + part2
    members = []
    for _ in range(rng.randint(1, 4)):
        members.append(frozenset(rng.sample(vs, rng.randint(1, len(vs)))))
    # duplicate one part-1 vertex into a fresh twin
    source = rng.choice(part1)
    twin = "u_twin"
    part1 = part1 + [twin]
    members = [m | {twin} if source in m else m for m in members]
    host = HostGraph.bipartite(part1, part2)
    return CoverFamily(host, members), (source, twin)


def _delete_vertex(cover: CoverFamily, x: str) -> CoverFamily:
    part1 = [v for v in cover.host.part1 if v != x]
    members = {m - {x} for m in cover.members}
    members = {m for m in members if m}
    return CoverFamily(HostGraph.bipartite(part1, cover.host.part2), members)


class TestSolver:
    def test_whole_ground_always_feasible(self):
        inst = GeneralCoverInstance(
            ["a", "b", "c"],
            [["a", "b", "c"], ["a", "b"]],
            [(["a"], 1), (["b"], 1), (["c"], 1)],
        )
        sol = solve_general_cover(inst)
        assert sol.feasible and sol.size >= 1

    def test_vacuous_caps_find_largest_minimal_cover(self):
        candidates = [["a"], ["b"], ["c"], ["a", "b", "c"]]
        inst = GeneralCoverInstance(
            ["a", "b", "c"], candidates, [(["a", "b", "c"], len(candidates))]
        )
        sol = solve_general_cover(inst)
        assert sol.feasible and sol.size == 3

    def test_k3_encoding_degree_one_infeasible(self):
        host = HostGraph.complete(["x", "y", "z"])
        pairs = [frozenset(p) for p in itertools.combinations("xyz", 2)]
        sol = solve_general_cover(encode_edge_cover_as_general(host, pairs, 1))
        assert not sol.feasible

    def test_k3_encoding_degree_two(self):
        host = HostGraph.complete(["x", "y", "z"])
        pairs = [frozenset(p) for p in itertools.combinations("xyz", 2)]
        sol = solve_general_cover(encode_edge_cover_as_general(host, pairs, 2))
        assert sol.feasible and sol.size == 3

    def test_k22_encoding_matches_level_two(self):
        c = lower_bound_cover(2)
        inst = encode_edge_cover_as_general(c.host, c.members, 2)
        sol = solve_general_cover(inst)
        assert sol.feasible and sol.size == 4

    def test_encoded_solutions_are_minimal_covers(self, triangle_cover):
        host = triangle_cover.host
        pairs = [frozenset(p) for p in itertools.combinations(host.part1, 2)]
        inst = encode_edge_cover_as_general(host, pairs, 2)
        sol = solve_general_cover(inst)
        assert satisfies_general_cover(inst, sol.witness)

    def test_budget_error_is_distinct_from_infeasible(self):
        ground = [f"g{i}" for i in range(16)]
        candidates = [
            [ground[i], ground[(i + 1) % 16], ground[(i + 5) % 16]]
            for i in range(16)
        ] + [[g] for g in ground]
        inst = GeneralCoverInstance(ground, candidates, [])
        with pytest.raises(BudgetExhausted):
            solve_general_cover(inst, budget_secs=0.0)

    def test_agrees_with_brute_force(self):
        rng = random.Random(1234)
        for _ in range(120):
            inst = _random_instance(rng)
            sol = solve_general_cover(inst)
            oracle = brute_force_general_cover(inst)
            if oracle is None:
                assert not sol.feasible
            else:
                assert sol.feasible and sol.size == oracle[0]


def _random_instance(rng: random.Random) -> GeneralCoverInstance:
    n = rng.randint(1, 6)
    ground = [f"e{i}" for i in range(n)]
    candidates = []
    for _ in range(rng.randint(1, 6)):
        size = rng.randint(1, n)
        candidates.append(rng.sample(ground, size))
    restrictions = []
    for _ in range(rng.randint(0, 3)):
        size = rng.randint(1, n)
        restrictions.append((rng.sample(ground, size), rng.randint(1, 3)))
    return GeneralCoverInstance(ground, candidates, restrictions)


class TestMatchingEncoding:
    def test_planted_matchings_match_the_oracle(self):
        rng = random.Random(77)
        for _ in range(60):
            inst, left, right, edges = _planted_instance(rng)
            nu = bipartite_matching_size(left, right, edges)
            assert nu == len(left)  # planted
            sol = solve_general_cover(inst)
            assert sol.feasible and sol.size == nu

    def test_deficient_graphs_are_infeasible(self):
        rng = random.Random(88)
        seen_infeasible = 0
        for _ in range(60):
            left = [f"l{i}" for i in range(rng.randint(1, 4))]
            right = [f"r{i}" for i in range(rng.randint(1, 4))]
            edges = [
                (l, r)
                for l in left
                for r in right
                if rng.random() < 0.4
            ]
            inst = encode_perfect_matching(left, right, edges)
            nu = bipartite_matching_size(left, right, edges)
            perfect = nu * 2 == len(left) + len(right)
            sol = solve_general_cover(inst)
            assert sol.feasible == perfect
            if sol.feasible:
                assert sol.size == nu
            else:
                seen_infeasible += 1
        assert seen_infeasible > 0


def _planted_instance(rng: random.Random):
    n = rng.randint(1, 4)
    left = [f"l{i}" for i in range(n)]
    right = [f"r{i}" for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {(left[i], right[perm[i]]) for i in range(n)}
    for l in left:
        for r in right:
            if rng.random() < 0.3:
                edges.add((l, r))
    return encode_perfect_matching(left, right, sorted(edges)), left, right, sorted(edges)
