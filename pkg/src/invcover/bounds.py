"""Closed-form bounds on the extremal cover quantities, in exact integer
arithmetic.

Quantities: b(d) for complete bipartite hosts, c(d) for complete hosts,
i(d) for invertibility-critical hypergraphs, and the two-sided b(d1, d2).
They are chained by c(d) <= i(d) <= b(d) <= c(d+1).  Binomials come from
``math.comb``, so values stay exact far beyond 64-bit range.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .core import DomainError


@dataclass(frozen=True)
class BoundReport:
    """Lower/upper bracket for one quantity, with provenance notes."""

    quantity: str
    args: tuple[int, ...]
    lower: int
    upper: int
    lower_source: str
    upper_source: str
    known_exact: int | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise AssertionError("lower bound exceeds upper bound")


def upper_bound_members(d: int) -> int:
    """(d - 1) * C(2d - 1, d) + 1, the set-pair counting bound."""
    if d < 1:
        raise DomainError("degree must be positive")
    return (d - 1) * comb(2 * d - 1, d) + 1


def lower_bound_members(d: int) -> int:
    """3 * 2^(d-1) - 2, the size of the recursive construction."""
    if d < 1:
        raise DomainError("degree must be positive")
    return 3 * 2 ** (d - 1) - 2


def two_sided_upper(d1: int, d2: int) -> int:
    """(d1 - 1) * C(d1 + d2 - 1, d2) + 1 with the smaller degree first."""
    if d1 < 1 or d2 < 1:
        raise DomainError("degrees must be positive")
    lo, hi = min(d1, d2), max(d1, d2)
    return (lo - 1) * comb(lo + hi - 1, hi) + 1


def bounds_b(d: int) -> BoundReport:
    """Bracket for the largest degree-d minimal edge cover of a complete
    bipartite graph."""
    lower = lower_bound_members(d)
    upper = upper_bound_members(d)
    known = lower if lower == upper else None
    return BoundReport(
        quantity="b",
        args=(d,),
        lower=lower,
        upper=upper,
        lower_source="recursive doubling construction",
        upper_source="set-pair counting bound",
        known_exact=known,
    )


def bounds_i(d: int) -> BoundReport:
    """Bracket for the largest invertibility-critical hypergraph of degree d.

    The lower bound is the bipartite construction one degree down (the
    reduction chain gives i(d) >= b(d-1)); d = 2 additionally carries the
    known exact value 3, an unpublished result reported in the literature.
    """
    if d < 1:
        raise DomainError("degree must be positive")
    lower = 1 if d == 1 else max(1, 3 * 2 ** (d - 2) - 2)
    upper = upper_bound_members(d)
    known = 1 if d == 1 else (3 if d == 2 else None)
    notes = (
        "chain: c(d) <= i(d) <= b(d) <= c(d+1)",
    )
    if d == 2:
        notes += (
            "exact value 3 is a cited literature fact, not derived here",
        )
    return BoundReport(
        quantity="i",
        args=(d,),
        lower=lower,
        upper=upper,
        lower_source="bipartite construction via the reduction chain",
        upper_source="set-pair counting bound",
        known_exact=known,
        notes=notes,
    )


def bounds_b2(d1: int, d2: int) -> BoundReport:
    """Bracket for the two-sided variant b(d1, d2).

    The upper bound is evaluated in both orientations and the smaller one
    reported.  No asymmetric lower-bound construction is known; for
    d1 != d2 the trivial bound 1 is reported and the gap noted.
    """
    upper = two_sided_upper(d1, d2)
    if d1 == d2:
        lower = lower_bound_members(d1)
        lower_source = "recursive doubling construction"
        notes: tuple[str, ...] = ()
    else:
        lower = 1
        lower_source = "trivial"
        notes = (
            "no asymmetric lower-bound construction is available; gap unexplored",
        )
    lo, hi = min(d1, d2), max(d1, d2)
    notes += (
        f"orientations: ({lo},{hi}) -> {(lo - 1) * comb(lo + hi - 1, hi) + 1}, "
        f"({hi},{lo}) -> {(hi - 1) * comb(lo + hi - 1, lo) + 1}; smaller reported",
    )
    return BoundReport(
        quantity="b2",
        args=(d1, d2),
        lower=lower,
        upper=upper,
        lower_source=lower_source,
        upper_source="two-sided set-pair counting bound",
        known_exact=upper if upper == lower else None,
        notes=notes,
    )


def bounds_table(max_d: int) -> list[BoundReport]:
    return [bounds_b(d) for d in range(1, max_d + 1)]
