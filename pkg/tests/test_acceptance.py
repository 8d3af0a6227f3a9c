"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines; every
expected value is an exact integer or exact rational, and the runtime
limits are asserted with generous wall-clock margins.
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction
from math import comb

import pytest

from invcover.audit import (
    audit_upper_bound,
    bollobas_sum,
    level_bounds_check,
    verify_cross_intersection,
)
from invcover.bounds import bounds_b, bounds_b2, bounds_i
from invcover.core import Hypergraph
from invcover.cover import (
    all_pairs_cover,
    canonical_form,
    is_isomorphic,
    is_minimal_edge_cover,
    part_degrees,
    prune_nonessential,
)
from invcover.constructions import (
    cover_to_critical,
    covers_union_to_edge_cover,
    critical_to_bipartite_cover,
    double_cover,
    edge_cover_to_cover_family,
    lower_bound_cover,
)
from invcover.invertibility import (
    bipartite_matching_size,
    is_invertibility_critical,
    is_invertible,
)
from invcover.search import (
    SearchConfig,
    encode_edge_cover_as_general,
    encode_perfect_matching,
    search_b,
    search_c,
    search_i,
    solve_general_cover,
)

from oracles import brute_force_invertible, random_hypergraph


def report(n: int, name: str) -> None:
    print(f"ACCEPTANCE PASS  criterion {n}: {name}")


def test_criterion_1_exact_small_values():
    start = time.monotonic()

    rb1 = search_b(1)
    assert rb1.best == 1 and rb1.exhaustive

    rc1 = search_c(1)
    assert rc1.best == 1

    rb2 = search_b(2, SearchConfig(max_members=4, max_part_size=10))
    assert rb2.best == 4 and rb2.exhaustive

    ri2 = search_i(2, SearchConfig(max_members=4, max_vertices=9))
    assert ri2.best == 3
    assert ri2.exhaustive is False

    triangle_witness = cover_to_critical(all_pairs_cover(3))
    assert len(triangle_witness.edges) == 3
    assert is_invertibility_critical(triangle_witness)

    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    report(1, f"exact small values b(1)=c(1)=1, b(2)=4, i(2)>=3 ({elapsed:.1f}s)")


def test_criterion_2_construction_sizes():
    start = time.monotonic()
    expected = [1, 4, 10, 22, 46, 94, 190]
    for d, size in zip(range(1, 8), expected):
        c = lower_bound_cover(d)
        assert len(c.members) == size
        assert is_minimal_edge_cover(c)
        assert part_degrees(c) == (d, d)
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    report(2, f"construction sizes 1,4,10,22,46,94,190 ({elapsed:.1f}s)")


def test_criterion_3_doubling_identity():
    for d in range(1, 6):
        base = lower_bound_cover(d)
        out = double_cover(base)
        assert len(out.members) == 2 * (3 * 2 ** (d - 1) - 2) + 2
        assert is_minimal_edge_cover(out)
        assert part_degrees(out) == (d + 1, d + 1)
    assert is_isomorphic(double_cover(lower_bound_cover(1)), lower_bound_cover(2))
    report(3, "doubling yields 2n+2 members at degree d+1; d=1 doubles to level 2")


def test_criterion_4_matching_oracle():
    start = time.monotonic()
    rng = random.Random(20240817)
    mismatches = 0
    for _ in range(1000):
        h = random_hypergraph(rng, max_vertices=7, max_edges=6)
        if is_invertible(h) != brute_force_invertible(h):
            mismatches += 1
    assert mismatches == 0
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    report(4, f"matching oracle: 1000 random hypergraphs, zero mismatches ({elapsed:.1f}s)")


def test_criterion_5_reduction_pipeline():
    covers = []
    for d in (1, 2):
        outcome = search_c(d)
        covers.extend(outcome.witnesses)
    for n in (3, 4, 5):
        covers.append(all_pairs_cover(n))
    assert len(covers) >= 5
    failures = 0
    for cover in covers:
        critical = cover_to_critical(cover)
        if not is_invertibility_critical(critical):
            failures += 1
            continue
        projected = critical_to_bipartite_cover(critical)
        if not is_minimal_edge_cover(projected):
            failures += 1
            continue
        d1, d2 = part_degrees(projected)
        if max(d1, d2) > critical.max_degree():
            failures += 1
    assert failures == 0
    report(5, f"reduction pipeline on {len(covers)} covers, zero failures")


def test_criterion_6_proof_audit():
    start = time.monotonic()
    for d in range(2, 7):
        cover = prune_nonessential(lower_bound_cover(d))
        trace = audit_upper_bound(cover)
        part1 = frozenset(cover.host.part1)
        for lv in trace.levels:
            residuals = dict(lv.residuals)
            for x in lv.tight:
                assert residuals[x] and residuals[x] <= part1
                assert not residuals[x] & lv.frontier
            assert verify_cross_intersection(lv.set_pairs)
            total = bollobas_sum(lv.set_pairs)
            assert isinstance(total, Fraction) and total <= 1
            assert len(lv.extension) <= comb(d + lv.k - 1, lv.k)
            slack_bound = (d - 1) * comb(d + lv.k - 1, lv.k)
            if len(lv.extension) <= 1:
                slack_bound = max(d, slack_bound)
            assert len(lv.new_members) <= slack_bound
        reportd = level_bounds_check(trace, d, d)
        assert reportd.total <= reportd.final_bound == (d - 1) * comb(2 * d - 1, d) + 1
        if d == 2:
            assert reportd.tight and reportd.total == 4
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    report(6, f"proof audit d=2..6, all invariants, tight at d=2 ({elapsed:.1f}s)")


def test_criterion_7_cover_family_round_trip():
    from invcover.constructions import is_minimal_cover

    for d in (2, 3):
        cover = prune_nonessential(lower_bound_cover(d))
        f, hh = edge_cover_to_cover_family(cover)
        for cand in hh:
            assert is_minimal_cover(cand, f)
        out = covers_union_to_edge_cover(f, hh)
        assert len(out.members) == 3 * 2 ** (d - 1) - 2
        assert is_minimal_edge_cover(out)
    report(7, "cover-family correspondence round-trips at d=2,3")


def test_criterion_8_general_cover_solver():
    rng = random.Random(8888)
    for _ in range(200):
        n = rng.randint(1, 4)
        left = [f"l{i}" for i in range(n)]
        right = [f"r{i}" for i in range(n)]
        perm = list(range(n))
        rng.shuffle(perm)
        edges = {(left[i], right[perm[i]]) for i in range(n)}
        for l in left:
            for r in right:
                if rng.random() < 0.35:
                    edges.add((l, r))
        inst = encode_perfect_matching(left, right, sorted(edges))
        nu = bipartite_matching_size(left, right, sorted(edges))
        solution = solve_general_cover(inst)
        assert solution.feasible
        assert solution.size == nu

    pairs = [frozenset(p) for p in itertools.combinations("xyz", 2)]
    from invcover.cover import HostGraph

    host = HostGraph.complete(["x", "y", "z"])
    assert not solve_general_cover(encode_edge_cover_as_general(host, pairs, 1)).feasible
    sol = solve_general_cover(encode_edge_cover_as_general(host, pairs, 2))
    assert sol.feasible and sol.size == 3
    report(8, "capped-cover solver: 200 matching encodings + both triangle encodings")


def test_criterion_9_bound_tables():
    table = {1: (1, 1), 2: (4, 4), 3: (10, 21), 4: (22, 106)}
    for d, (lo, hi) in table.items():
        rep = bounds_b(d)
        assert (rep.lower, rep.upper) == (lo, hi)
        repi = bounds_i(d)
        assert repi.upper == hi
    assert bounds_b2(2, 3).upper == 5
    for d in range(1, 65):
        rep = bounds_b(d)
        assert rep.lower == 3 * 2 ** (d - 1) - 2
        assert rep.upper == (d - 1) * comb(2 * d - 1, d) + 1
        assert bounds_b2(d, d).upper == rep.upper
    report(9, "bound tables exact through d=64, two-sided (2,3) upper = 5")
