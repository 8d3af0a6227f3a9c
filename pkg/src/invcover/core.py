"""Hypergraphs, permutations and the inversion predicate.

A hypergraph is a finite family of nonempty vertex subsets (edges) over a
finite vertex universe.  A permutation pi of the vertex set *inverts* the
hypergraph when pi(E) is disjoint from E for every edge E.  Everything here
is immutable and safe to share between threads.

Vertex labels are strings.  All deterministic output (serialization, search
witnesses, reports) is ordered by the lexicographic label order recorded in
``Hypergraph.vertices``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ContractError(ValueError):
    """A documented precondition of an operation does not hold."""


def sorted_sets(sets: Iterable[frozenset[str]]) -> tuple[frozenset[str], ...]:
    """Deterministic ordering of a family of label sets."""
    return tuple(sorted(sets, key=lambda s: (len(s), sorted(s))))


@dataclass(frozen=True)
class Hypergraph:
    """An immutable hypergraph ``(edges, vertices)``.

    Edges form a set (no duplicates) of nonempty subsets of the vertex
    universe.  Isolated vertices are allowed; several constructions pad a
    hypergraph with vertices that occur in no edge.
    """

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]]):
        vs = tuple(sorted(set(vertices)))
        vset = set(vs)
        es = set()
        for e in edges:
            fe = frozenset(e)
            if not fe:
                raise DomainError("empty edge is not allowed")
            if not fe <= vset:
                raise DomainError(f"edge {sorted(fe)} contains unknown vertices")
            es.add(fe)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def sorted_edges(self) -> tuple[frozenset[str], ...]:
        return sorted_sets(self.edges)

    def _require_vertex(self, x: str) -> None:
        if x not in self.vertex_set:
            raise DomainError(f"unknown vertex {x!r}")

    def star(self, x: str) -> frozenset[frozenset[str]]:
        """All edges containing ``x``."""
        self._require_vertex(x)
        return frozenset(e for e in self.edges if x in e)

    def degree(self, x: str) -> int:
        """Number of edges containing ``x``."""
        return len(self.star(x))

    def max_degree(self) -> int:
        """Largest vertex degree; 0 for an edgeless hypergraph."""
        if not self.edges:
            return 0
        counts: dict[str, int] = {}
        for e in self.edges:
            for x in e:
                counts[x] = counts.get(x, 0) + 1
        return max(counts.values(), default=0)

    def without_edge(self, edge: Iterable[str]) -> "Hypergraph":
        """The hypergraph with one edge removed (vertex set unchanged)."""
        fe = frozenset(edge)
        if fe not in self.edges:
            raise DomainError(f"edge {sorted(fe)} is not present")
        return Hypergraph(self.vertices, self.edges - {fe})

    def __iter__(self) -> Iterator[frozenset[str]]:
        return iter(self.sorted_edges())


@dataclass(frozen=True)
class Permutation:
    """A bijection of a finite label set onto itself."""

    pairs: tuple[tuple[str, str], ...] = field(default=())

    def __init__(self, mapping: dict[str, str] | Iterable[tuple[str, str]]):
        items = dict(mapping)
        if set(items.values()) != set(items.keys()):
            raise DomainError("mapping is not a permutation of its domain")
        object.__setattr__(self, "pairs", tuple(sorted(items.items())))

    @classmethod
    def identity(cls, labels: Iterable[str]) -> "Permutation":
        return cls({x: x for x in labels})

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self.pairs)

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(x for x, _ in self.pairs)

    def __call__(self, x: str) -> str:
        m = self.mapping
        if x not in m:
            raise DomainError(f"{x!r} is outside the permutation domain")
        return m[x]

    def apply(self, subset: Iterable[str]) -> frozenset[str]:
        """Elementwise image of a vertex set; preserves cardinality."""
        m = self.mapping
        out = set()
        for x in subset:
            if x not in m:
                raise DomainError(f"{x!r} is outside the permutation domain")
            out.add(m[x])
        return frozenset(out)

    def inverts(self, h: Hypergraph) -> bool:
        """True iff every edge of ``h`` is disjoint from its image."""
        if self.domain != h.vertex_set:
            raise DomainError("permutation domain differs from the vertex set")
        return all(self.apply(e).isdisjoint(e) for e in h.edges)
