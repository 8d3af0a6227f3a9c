"""Explicit constructions and the reductions between covers and critical
hypergraphs.

* the recursive lower-bound family: a minimal edge cover of the complete
  bipartite graph on two parts of size 2^(d-1) with exactly 3*2^(d-1) - 2
  members, every vertex of degree d;
* the doubling step that turns any minimal edge cover of degree d into one
  of degree d+1 with twice the members plus two;
* minimal complete-host cover -> invertibility-critical hypergraph (pad
  with |V| - 1 isolated vertices);
* critical hypergraph -> minimal bipartite cover (project the edges onto a
  Hall-violator pair of tagged vertex sets);
* minimal bipartite cover -> minimal complete-host cover (adjoin the two
  parts, then drop whichever of them is redundant);
* the two-way correspondence between minimal edge covers of a complete
  bipartite graph and families of minimal covers of a set family.

Fresh vertices are named deterministically (suffix bits for recursive
copies, ``pad0..`` for padding, ``1:``/``2:`` side tags for projections),
so outputs are stable across runs and comparable against golden files.
"""

from __future__ import annotations

import json
from typing import Collection, Hashable, Iterable

from .core import ContractError, DomainError, Hypergraph
from .cover import (
    CoverFamily,
    HostGraph,
    is_edge_cover,
    is_minimal_edge_cover,
    part_degrees,
)
from .invertibility import find_deficiency_set, is_invertibility_critical


def lower_bound_cover(d: int) -> CoverFamily:
    """The recursive extremal cover of the complete bipartite graph.

    Level 1 is the single member u+v on one vertex per part.  Level d takes
    two disjoint copies of level d-1 (labels suffixed "0" and "1") plus the
    two crossing members (part-1 of one copy joined with part-2 of the
    other).  Member count satisfies size(d) = 2*size(d-1) + 2.
    """
    if d < 1:
        raise DomainError("level must be at least 1")
    u, v, members = _lower_bound(d, "")
    host = HostGraph.bipartite(u, v)
    return CoverFamily(host, members)


def _lower_bound(
    d: int, suffix: str
) -> tuple[list[str], list[str], list[frozenset[str]]]:
    if d == 1:
        u, v = f"u{suffix}", f"v{suffix}"
        return [u], [v], [frozenset({u, v})]
    u0, v0, m0 = _lower_bound(d - 1, suffix + "0")
    u1, v1, m1 = _lower_bound(d - 1, suffix + "1")
    crossing = [frozenset(u0) | frozenset(v1), frozenset(u1) | frozenset(v0)]
    return u0 + u1, v0 + v1, crossing + m0 + m1


def double_cover(cover: CoverFamily) -> CoverFamily:
    """Apply the doubling step to any minimal bipartite edge cover.

    Output: two relabeled copies of the input plus the two crossing members.
    Every vertex gains exactly one incidence (its crossing member), so a
    degree-d input yields a degree-(d+1) output with 2*|members| + 2
    members, again a minimal edge cover.
    """
    if not cover.host.is_bipartite():
        raise DomainError("doubling is defined over complete-bipartite hosts")
    if not is_minimal_edge_cover(cover):
        raise ContractError("doubling requires a minimal edge cover")
    host = cover.host
    copy = [
        {x: f"{x}{bit}" for x in host.part1 + host.part2} for bit in ("0", "1")
    ]
    p1 = [copy[b][x] for b in (0, 1) for x in host.part1]
    p2 = [copy[b][x] for b in (0, 1) for x in host.part2]
    members: list[frozenset[str]] = [
        frozenset(copy[0][x] for x in host.part1)
        | frozenset(copy[1][y] for y in host.part2),
        frozenset(copy[1][x] for x in host.part1)
        | frozenset(copy[0][y] for y in host.part2),
    ]
    for b in (0, 1):
        members.extend(frozenset(copy[b][x] for x in m) for m in cover.sorted_members())
    out = CoverFamily(HostGraph.bipartite(p1, p2), members)
    assert len(out.members) == 2 * len(cover.members) + 2
    assert is_minimal_edge_cover(out)
    return out


def _fresh_pad_labels(taken: frozenset[str], count: int) -> list[str]:
    base = "pad"
    while any(f"{base}{i}" in taken for i in range(count)):
        base += "_"
    return [f"{base}{i}" for i in range(count)]


def cover_to_critical(cover: CoverFamily) -> Hypergraph:
    """Minimal edge cover of a complete graph -> critical hypergraph.

    The members become the edges; |V| - 1 fresh isolated vertices are added.
    Coverage makes the un-padded part too poor in compatibility-graph
    neighbors for a perfect matching, while minimality leaves an inverting
    permutation after any single edge is dropped.
    """
    if cover.host.is_bipartite():
        raise DomainError("expected a cover of a complete host")
    if not is_minimal_edge_cover(cover):
        raise ContractError("cover_to_critical requires a minimal edge cover")
    vertices = cover.host.part1
    pads = _fresh_pad_labels(frozenset(vertices), len(vertices) - 1)
    return Hypergraph(list(vertices) + pads, cover.members)


TAG1 = "1:"
TAG2 = "2:"


def critical_to_bipartite_cover(h: Hypergraph) -> CoverFamily:
    """Invertibility-critical hypergraph -> minimal bipartite edge cover.

    Project every edge onto (U intersection, W intersection) where U is a
    Hall violator of the compatibility graph and W is the complement of its
    neighborhood.  U and W may overlap in V, so the output parts carry side
    tags and are genuinely disjoint.  Degrees never increase and each edge
    contributes exactly one member.
    """
    if not is_invertibility_critical(h):
        raise ContractError("input hypergraph is not invertibility critical")
    deficiency = find_deficiency_set(h)
    assert deficiency is not None
    u = deficiency.vertices
    w = h.vertex_set - deficiency.neighborhood
    host = HostGraph.bipartite(
        [TAG1 + x for x in u], [TAG2 + y for y in w]
    )
    members: list[frozenset[str]] = []
    for e in h.sorted_edges():
        m = frozenset(TAG1 + x for x in e & u) | frozenset(
            TAG2 + y for y in e & w
        )
        assert m, "criticality guarantees every edge meets U x W"
        members.append(m)
    out = CoverFamily(host, members)
    if len(out.members) != len(h.edges):
        raise AssertionError("distinct edges projected to equal members")
    assert is_minimal_edge_cover(out)
    return out


def bipartite_to_complete_cover(cover: CoverFamily) -> CoverFamily:
    """Minimal bipartite cover -> minimal cover of the complete host.

    Adjoin both parts as members, then remove part-1 and/or part-2 again
    whenever the family still covers without them (part-1 is tried first).
    Each vertex lies in exactly one adjoined part, so degrees grow by at
    most one.
    """
    if not cover.host.is_bipartite():
        raise DomainError("expected a cover of a complete-bipartite host")
    if len(cover.host.part1) < 2 or len(cover.host.part2) < 2:
        raise ContractError("both parts need internal edges, so size >= 2")
    if not is_minimal_edge_cover(cover):
        raise ContractError("input must be a minimal edge cover")
    host = HostGraph.complete(cover.host.vertices)
    p1 = frozenset(cover.host.part1)
    p2 = frozenset(cover.host.part2)
    members = set(cover.members) | {p1, p2}
    for part in (p1, p2):
        trimmed = members - {part}
        if is_edge_cover(CoverFamily(host, trimmed)):
            members = trimmed
    out = CoverFamily(host, members)
    assert is_minimal_edge_cover(out)
    assert out.max_degree() <= cover.max_degree() + 1
    return out


# --- unions of minimal covers -------------------------------------------------

Element = Hashable


def element_key(x: Element) -> str:
    """Deterministic, collision-free display key for set elements.

    Strings are JSON-quoted; frozensets recurse, so families of sets of sets
    (which both directions of the correspondence produce) stay printable.
    """
    if isinstance(x, (frozenset, set)):
        return "{" + ",".join(sorted(element_key(e) for e in x)) + "}"
    if isinstance(x, str):
        return json.dumps(x)
    return json.dumps(str(x))


def is_minimal_cover(candidate: frozenset, family: Collection[frozenset]) -> bool:
    """``candidate`` meets every set of ``family`` and no proper subset does."""
    if not all(candidate & f for f in family):
        return False
    return all(
        any(not ((candidate - {y}) & f) for f in family) for y in candidate
    )


def covers_union_to_edge_cover(
    f: Collection[frozenset], hh: Collection[frozenset]
) -> CoverFamily:
    """Family of minimal covers -> minimal edge cover of the bipartite graph
    whose parts are the covered family ``f`` and the covering family ``hh``.

    Every element x of the union of ``hh`` contributes one member: the sets
    of either family containing x.  The member count equals |union(hh)|.
    """
    fs = _distinct_sets(f, "covered family")
    hs = _distinct_sets(hh, "cover family")
    for cand in hs:
        if not is_minimal_cover(cand, fs):
            raise ContractError(
                f"{element_key(cand)} is not a minimal cover of the family"
            )
    part_f = [f"F:{element_key(s)}" for s in fs]
    part_h = [f"H:{element_key(s)}" for s in hs]
    ground = sorted({x for cand in hs for x in cand}, key=element_key)
    members = []
    for x in ground:
        members.append(
            frozenset(
                f"H:{element_key(s)}" for s in hs if x in s
            )
            | frozenset(f"F:{element_key(s)}" for s in fs if x in s)
        )
    host = HostGraph.bipartite(part_f, part_h)
    out = CoverFamily(host, members)
    if len(out.members) != len(ground):
        raise AssertionError("distinct union elements produced equal members")
    assert is_minimal_edge_cover(out)
    return out


def edge_cover_to_cover_family(
    cover: CoverFamily,
) -> tuple[frozenset[frozenset[frozenset[str]]], frozenset[frozenset[frozenset[str]]]]:
    """Minimal, all-essential bipartite edge cover -> (covered family,
    family of minimal covers), the converse correspondence.

    The covered family collects the member-stars of part-1 vertices; the
    cover family those of part-2 vertices.  Essentiality of every element
    makes each part-2 star a *minimal* cover of the part-1 family.
    """
    if not cover.host.is_bipartite():
        raise DomainError("expected a cover of a complete-bipartite host")
    if not is_minimal_edge_cover(cover):
        raise ContractError("input must be a minimal edge cover")
    from .cover import essential_elements

    for m in cover.sorted_members():
        if essential_elements(cover, m) != m:
            raise ContractError(
                "every element must be essential; apply prune_nonessential first"
            )
    def star(x: str) -> frozenset[frozenset[str]]:
        return frozenset(m for m in cover.members if x in m)

    fs = frozenset(star(x) for x in cover.host.part1)
    hs = frozenset(star(y) for y in cover.host.part2)
    for cand in hs:
        assert is_minimal_cover(cand, fs)
    return fs, hs


def _distinct_sets(family: Collection, what: str) -> list[frozenset]:
    out = []
    seen = set()
    for s in family:
        fs = frozenset(s)
        if not fs:
            raise DomainError(f"{what} contains an empty set")
        if fs in seen:
            continue
        seen.add(fs)
        out.append(fs)
    if not out:
        raise DomainError(f"{what} is empty")
    return sorted(out, key=lambda s: (len(s), sorted(map(element_key, s))))
