"""Invertibility testing via the compatibility graph.

A hypergraph is invertible exactly when its compatibility graph has a
perfect matching: the bipartite graph on two tagged copies of the vertex
set in which copy-1 of x is adjacent to copy-2 of y iff no edge contains
both x and y (taking x = y literally: a vertex may map to itself only when
it lies in no edge).

When no perfect matching exists, Koenig/Hall duality produces a certificate:
a vertex set U whose copy-1 image has fewer than |U| neighbors.  Both the
matching and the certificate are computed with deterministic iteration
order, so results are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import DomainError, Hypergraph, Permutation, sorted_sets

_INF = -1


@dataclass(frozen=True)
class BipartiteCompatibilityGraph:
    """Adjacency between copy-1 and copy-2 vertex copies, as bitmasks.

    ``adj[i]`` holds the copy-2 neighbors of copy-1 vertex ``labels[i]``.
    The relation is symmetric: adjacency of (copy1 x, copy2 y) and of
    (copy1 y, copy2 x) coincide, so the same masks serve both sides.
    """

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, x: str) -> int:
        try:
            return self.labels.index(x)
        except ValueError:
            raise DomainError(f"unknown vertex {x!r}") from None

    def adjacent(self, x: str, y: str) -> bool:
        return bool(self.adj[self.index(x)] >> self.index(y) & 1)

    def neighbors(self, x: str) -> frozenset[str]:
        mask = self.adj[self.index(x)]
        return frozenset(l for j, l in enumerate(self.labels) if mask >> j & 1)

    def pairs(self) -> frozenset[tuple[str, str]]:
        """All adjacent (copy-1 label, copy-2 label) pairs."""
        out = set()
        for i, mask in enumerate(self.adj):
            for j in range(self.n):
                if mask >> j & 1:
                    out.add((self.labels[i], self.labels[j]))
        return frozenset(out)


@dataclass(frozen=True)
class Matching:
    """A set of (copy-1 label, copy-2 label) pairs, no vertex repeated."""

    pairs: tuple[tuple[str, str], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict[str, str]:
        return dict(self.pairs)


@dataclass(frozen=True)
class DeficiencySet:
    """A Hall violator: |neighborhood(copy1(vertices))| < |vertices|."""

    vertices: frozenset[str]
    neighborhood: frozenset[str]


def build_compatibility_graph(h: Hypergraph) -> BipartiteCompatibilityGraph:
    """Compatibility graph of ``h``: (x, y) adjacent iff no edge has both."""
    labels = h.vertices
    index = {x: i for i, x in enumerate(labels)}
    n = len(labels)
    full = (1 << n) - 1
    forbidden = [0] * n
    for e in h.edges:
        emask = 0
        for x in e:
            emask |= 1 << index[x]
        for x in e:
            forbidden[index[x]] |= emask
    return BipartiteCompatibilityGraph(
        labels=labels, adj=tuple(full & ~f for f in forbidden)
    )


def _hopcroft_karp(adj: tuple[int, ...], n: int) -> tuple[list[int], list[int]]:
    """Maximum matching; returns (match_left, match_right) index arrays.

    Deterministic: BFS layers and DFS both scan vertices in index order.
    """
    neigh = [[j for j in range(n) if adj[i] >> j & 1] for i in range(n)]
    match_l = [_INF] * n
    match_r = [_INF] * n
    dist = [0] * n

    def bfs() -> bool:
        q: deque[int] = deque()
        for i in range(n):
            if match_l[i] == _INF:
                dist[i] = 0
                q.append(i)
            else:
                dist[i] = _INF
        found = False
        while q:
            i = q.popleft()
            for j in neigh[i]:
                k = match_r[j]
                if k == _INF:
                    found = True
                elif dist[k] == _INF:
                    dist[k] = dist[i] + 1
                    q.append(k)
        return found

    def dfs(i: int) -> bool:
        for j in neigh[i]:
            k = match_r[j]
            if k == _INF or (dist[k] == dist[i] + 1 and dfs(k)):
                match_l[i] = j
                match_r[j] = i
                return True
        dist[i] = _INF
        return False

    while bfs():
        for i in range(n):
            if match_l[i] == _INF:
                dfs(i)
    return match_l, match_r


def maximum_matching(g: BipartiteCompatibilityGraph) -> Matching:
    """A maximum matching of the compatibility graph."""
    match_l, _ = _hopcroft_karp(g.adj, g.n)
    pairs = tuple(
        (g.labels[i], g.labels[j]) for i, j in enumerate(match_l) if j != _INF
    )
    return Matching(pairs=pairs)


def is_invertible(h: Hypergraph) -> bool:
    """True iff some permutation maps every edge off itself."""
    g = build_compatibility_graph(h)
    return maximum_matching(g).size == g.n


def find_inverting_permutation(h: Hypergraph) -> Permutation | None:
    """An inverting permutation read off a perfect matching, if one exists."""
    g = build_compatibility_graph(h)
    m = maximum_matching(g)
    if m.size != g.n:
        return None
    pi = Permutation(m.as_dict())
    assert pi.inverts(h)
    return pi


def find_deficiency_set(h: Hypergraph) -> DeficiencySet | None:
    """A canonical Hall violator, or None when ``h`` is invertible.

    Under a maximum matching, the copy-1 vertices reachable by alternating
    paths from unmatched copy-1 vertices form a set U with |N(U)| < |U|;
    this closure is unique given the matching.
    """
    g = build_compatibility_graph(h)
    match_l, match_r = _hopcroft_karp(g.adj, g.n)
    if _INF not in match_l:
        return None
    reached_l = [match_l[i] == _INF for i in range(g.n)]
    reached_r = [False] * g.n
    q = deque(i for i in range(g.n) if reached_l[i])
    while q:
        i = q.popleft()
        mask = g.adj[i]
        for j in range(g.n):
            if mask >> j & 1 and not reached_r[j]:
                reached_r[j] = True
                k = match_r[j]
                if k != _INF and not reached_l[k]:
                    reached_l[k] = True
                    q.append(k)
    u = frozenset(g.labels[i] for i in range(g.n) if reached_l[i])
    nb = frozenset(g.labels[j] for j in range(g.n) if reached_r[j])
    assert len(nb) < len(u)
    return DeficiencySet(vertices=u, neighborhood=nb)


def bipartite_matching_size(
    left: tuple[str, ...] | list[str],
    right: tuple[str, ...] | list[str],
    edges: set[tuple[str, str]] | list[tuple[str, str]],
) -> int:
    """Maximum matching of an explicit bipartite graph, via the same
    deterministic engine the compatibility-graph checks use.

    The sides may have different sizes; rows are padded so the engine sees
    a square adjacency.
    """
    labels = list(left) + [r for r in right if r not in set(left)]
    index = {x: i for i, x in enumerate(labels)}
    adj = [0] * len(labels)
    for l, r in edges:
        adj[index[l]] |= 1 << index[r]
    match_l, _ = _hopcroft_karp(tuple(adj), len(labels))
    return sum(1 for j in match_l if j != _INF)


def is_invertibility_critical(h: Hypergraph) -> bool:
    """Not invertible, but invertible after removing any single edge."""
    if not h.edges:
        return False
    if is_invertible(h):
        return False
    return all(is_invertible(h.without_edge(e)) for e in h.sorted_edges())


def non_critical_witness_edge(h: Hypergraph) -> frozenset[str] | None:
    """For a non-invertible, non-critical hypergraph: an edge whose removal
    stays non-invertible.  None when ``h`` is invertible or critical."""
    if is_invertible(h):
        return None
    for e in sorted_sets(h.edges):
        if not is_invertible(h.without_edge(e)):
            return e
    return None
