"""Edge covers of implicit complete and complete-bipartite host graphs.

A family of vertex subsets covers a host graph when every host edge {x, y}
lies inside some family member.  The host edge set is never materialized:
coverage and minimality are decided with per-vertex bitmasks, so checks on
parts of size 64 with a few hundred members stay cheap.

A member element x is *essential* when some host edge at x is covered by
that member and by no other; minimal covers can be normalized so that every
element of every member is essential without changing the member count or
increasing any degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import ContractError, DomainError, sorted_sets

COMPLETE = "complete"
BIPARTITE = "bipartite"


@dataclass(frozen=True)
class HostGraph:
    """A complete graph, or a complete bipartite graph given by its parts."""

    kind: str
    part1: tuple[str, ...]
    part2: tuple[str, ...] = ()

    @classmethod
    def complete(cls, vertices: Iterable[str]) -> "HostGraph":
        vs = tuple(sorted(set(vertices)))
        if not vs:
            raise DomainError("complete host needs a nonempty vertex set")
        return cls(COMPLETE, vs, ())

    @classmethod
    def bipartite(cls, part1: Iterable[str], part2: Iterable[str]) -> "HostGraph":
        p1 = tuple(sorted(set(part1)))
        p2 = tuple(sorted(set(part2)))
        if not p1 or not p2:
            raise DomainError("bipartite host needs two nonempty parts")
        if set(p1) & set(p2):
            raise DomainError("bipartite host parts must be disjoint")
        return cls(BIPARTITE, p1, p2)

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self.part1 + self.part2))

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.part1) | frozenset(self.part2)

    def is_bipartite(self) -> bool:
        return self.kind == BIPARTITE

    def iter_host_edges(self) -> Iterator[tuple[str, str]]:
        """Lazy enumeration of all host edges (used by test oracles)."""
        if self.kind == COMPLETE:
            yield from itertools.combinations(self.part1, 2)
        else:
            yield from itertools.product(self.part1, self.part2)


@dataclass(frozen=True)
class CoverFamily:
    """A family of vertex subsets interpreted as an edge cover candidate."""

    host: HostGraph
    members: frozenset[frozenset[str]]

    def __init__(self, host: HostGraph, members: Iterable[Iterable[str]]):
        ms = set()
        vset = host.vertex_set
        for m in members:
            fm = frozenset(m)
            if not fm:
                raise DomainError("empty cover member is not allowed")
            if not fm <= vset:
                raise DomainError(f"member {sorted(fm)} leaves the host vertex set")
            ms.add(fm)
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "members", frozenset(ms))

    def sorted_members(self) -> tuple[frozenset[str], ...]:
        return sorted_sets(self.members)

    def degree(self, x: str) -> int:
        if x not in self.host.vertex_set:
            raise DomainError(f"unknown vertex {x!r}")
        return sum(1 for m in self.members if x in m)

    def max_degree(self) -> int:
        return max((self.degree(x) for x in self.host.vertices), default=0)


class _Incidence:
    """Bitmask view of a cover: for each vertex, which host edges at it are
    covered once and which more than once."""

    def __init__(self, cover: CoverFamily):
        host = cover.host
        self.labels = host.vertices
        self.index = {x: i for i, x in enumerate(self.labels)}
        self.n = len(self.labels)
        if host.is_bipartite():
            p1 = sum(1 << self.index[x] for x in host.part1)
            p2 = sum(1 << self.index[x] for x in host.part2)
            # mask of host-neighbors for each vertex
            self.other = [p2 if (1 << i) & p1 else p1 for i in range(self.n)]
        else:
            full = (1 << self.n) - 1
            self.other = [full & ~(1 << i) for i in range(self.n)]
        self.members = cover.sorted_members()
        self.member_masks = [
            sum(1 << self.index[x] for x in m) for m in self.members
        ]
        # per-vertex: host-neighbors covered at least once / more than once
        self.once = [0] * self.n
        self.twice = [0] * self.n
        for mask in self.member_masks:
            rest = mask
            while rest:
                low = rest & -rest
                i = low.bit_length() - 1
                rest ^= low
                cov = mask & self.other[i]
                self.twice[i] |= self.once[i] & cov
                self.once[i] |= cov

    def uncovered(self, i: int) -> int:
        return self.other[i] & ~self.once[i]

    def privately_covered(self, i: int) -> int:
        """Host-neighbors of vertex i whose edge is covered exactly once."""
        return self.once[i] & ~self.twice[i]


def is_edge_cover(cover: CoverFamily) -> bool:
    """True iff every host edge lies inside some member."""
    inc = _Incidence(cover)
    return all(inc.uncovered(i) == 0 for i in range(inc.n))


def is_minimal_edge_cover(cover: CoverFamily) -> bool:
    """True iff the family covers and every member covers some host edge
    privately (so no proper subfamily is a cover)."""
    inc = _Incidence(cover)
    if any(inc.uncovered(i) for i in range(inc.n)):
        return False
    for mask in inc.member_masks:
        if not _has_private_edge(inc, mask):
            return False
    return True


def _has_private_edge(inc: _Incidence, member_mask: int) -> bool:
    rest = member_mask
    while rest:
        low = rest & -rest
        i = low.bit_length() - 1
        rest ^= low
        if inc.privately_covered(i) & member_mask:
            return True
    return False


def essential_elements(cover: CoverFamily, member: Iterable[str]) -> frozenset[str]:
    """Elements of ``member`` with a host edge covered by it and nothing else."""
    fm = frozenset(member)
    if fm not in cover.members:
        raise DomainError(f"{sorted(fm)} is not a member of the family")
    inc = _Incidence(cover)
    mask = sum(1 << inc.index[x] for x in fm)
    out = set()
    for x in fm:
        i = inc.index[x]
        if inc.privately_covered(i) & mask:
            out.add(x)
    return frozenset(out)


def prune_nonessential(cover: CoverFamily) -> CoverFamily:
    """Remove non-essential elements until every element of every member is
    essential.

    Requires a minimal edge cover.  Elements are removed one at a time,
    members in sorted order and elements in sorted order within a member, so
    the result is deterministic.  Member count is preserved and no degree
    increases; the output is again a minimal edge cover and a fixpoint of
    this operation.
    """
    if not is_minimal_edge_cover(cover):
        raise ContractError("prune_nonessential requires a minimal edge cover")
    current = cover
    while True:
        removal = _first_nonessential(current)
        if removal is None:
            return current
        member, x = removal
        shrunk = member - {x}
        # a member cannot be emptied: its private edge has essential endpoints
        assert shrunk, "pruning emptied a member of a minimal cover"
        members = (current.members - {member}) | {shrunk}
        current = CoverFamily(current.host, members)
        assert len(current.members) == len(cover.members)


def _first_nonessential(cover: CoverFamily) -> tuple[frozenset[str], str] | None:
    for member in cover.sorted_members():
        keep = essential_elements(cover, member)
        for x in sorted(member):
            if x not in keep:
                return member, x
    return None


def part_degrees(cover: CoverFamily) -> tuple[int, int]:
    """Maximum member count over part-1 vertices and over part-2 vertices."""
    if not cover.host.is_bipartite():
        raise DomainError("part_degrees requires a complete-bipartite host")
    d1 = max((cover.degree(x) for x in cover.host.part1), default=0)
    d2 = max((cover.degree(y) for y in cover.host.part2), default=0)
    return d1, d2


def all_pairs_cover(n: int, prefix: str = "x") -> CoverFamily:
    """The family of all 2-element subsets of an n-vertex complete host.

    A minimal edge cover of degree n-1; handy sanity family for tests and a
    seed for searches over complete hosts.
    """
    if n < 2:
        raise DomainError("need at least two vertices")
    labels = [f"{prefix}{i}" for i in range(n)]
    host = HostGraph.complete(labels)
    return CoverFamily(host, [frozenset(p) for p in itertools.combinations(labels, 2)])


# --- canonical forms ---------------------------------------------------------
#
# Canonical relabeling by iterated incidence-signature refinement with
# individualization on ties.  Graph-isomorphism machinery would be overkill:
# the covers compared this way have at most a few dozen vertices.


def canonical_form(cover: CoverFamily) -> tuple:
    """A relabeling-invariant encoding of a cover family.

    Two covers over same-kind hosts are isomorphic (bipartite: up to swapping
    the parts) iff their canonical forms are equal.
    """
    if cover.host.is_bipartite():
        forms = [
            _canonical_sided(cover.sorted_members(), cover.host.part1, cover.host.part2),
            _canonical_sided(cover.sorted_members(), cover.host.part2, cover.host.part1),
        ]
        return min(forms)
    return _canonical_sided(cover.sorted_members(), cover.host.part1, ())


def is_isomorphic(a: CoverFamily, b: CoverFamily) -> bool:
    return canonical_form(a) == canonical_form(b)


def _canonical_sided(
    members: tuple[frozenset[str], ...],
    part1: tuple[str, ...],
    part2: tuple[str, ...],
) -> tuple:
    labels = list(part1) + list(part2)
    index = {x: i for i, x in enumerate(labels)}
    rows = [frozenset(index[x] for x in m) for m in members]
    colors = [0 if x in set(part1) else 1 for x in labels]
    best: list[tuple] = []
    _canon_search(rows, colors, (len(part1), len(part2)), best)
    return best[0]


def _refine(rows: list[frozenset[int]], colors: list[int]) -> list[int]:
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            mine = sorted(
                tuple(sorted(colors[u] for u in row)) for row in rows if v in row
            )
            sigs.append((colors[v], tuple(mine)))
        order = sorted(set(sigs))
        new = [order.index(s) for s in sigs]
        if new == colors:
            return colors
        colors = new


def _encode(rows: list[frozenset[int]], colors: list[int], parts: tuple[int, int]) -> tuple:
    perm = sorted(range(len(colors)), key=lambda v: (colors[v], v))
    pos = {v: i for i, v in enumerate(perm)}
    body = tuple(sorted(tuple(sorted(pos[v] for v in row)) for row in rows))
    return (parts, body)


def _canon_search(
    rows: list[frozenset[int]],
    colors: list[int],
    parts: tuple[int, int],
    best: list[tuple],
) -> None:
    colors = _refine(rows, list(colors))
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    split = next((vs for _, vs in sorted(groups.items()) if len(vs) > 1), None)
    if split is None:
        cand = _encode(rows, colors, parts)
        if not best or cand < best[0]:
            best[:] = [cand]
        return
    fresh = max(colors) + 1
    for v in split:
        branch = list(colors)
        branch[v] = fresh
        _canon_search(rows, branch, parts, best)
