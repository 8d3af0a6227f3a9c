"""Replay of the set-pair upper-bound argument on a concrete cover.

Given a minimal edge cover of a complete bipartite graph in which every
element of every member is essential, grow a chain of part-1 subsets
(frontiers) U_1 c U_2 c ... such that after k rounds every part-2 vertex x
has at least min(k, d(x)) members of its star touching the frontier.  Each
round records:

* the *tight* part-2 vertices: d(x) > k with exactly k star members touched;
* their *residuals*: the part-1 region their touched stars miss (nonempty
  because elements are essential, and disjoint from the frontier);
* the *extension*: a minimal transversal of the residuals, which becomes
  the next frontier increment;
* the *new members*: members first touched by the extension;
* a family of set pairs (one per extension vertex) witnessing, through the
  Bollobas set-pair inequality, that the extension and the new members are
  small.

All counting is exact: binomials are integers and the set-pair sum is an
exact rational, never a float.  Violated invariants raise AuditFailure
naming the level and the invariant; the theorems guarantee every check, so
a failure always means an implementation bug somewhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .core import ContractError
from .cover import CoverFamily, essential_elements, is_minimal_edge_cover, part_degrees

Member = frozenset[str]


class AuditFailure(AssertionError):
    """An invariant of the audited argument failed on concrete data."""

    def __init__(self, level: int | None, invariant: str, details: str = ""):
        self.level = level
        self.invariant = invariant
        where = f"level {level}" if level is not None else "final check"
        super().__init__(f"{where}: {invariant}" + (f" ({details})" if details else ""))


@dataclass(frozen=True)
class SetPair:
    """One indexed pair: members at the pivot vs the witness's touched star."""

    pivot: str
    witness: str
    a_members: frozenset[Member]
    b_members: frozenset[Member]


@dataclass(frozen=True)
class SetPairFamily:
    pairs: tuple[SetPair, ...]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class AuditLevel:
    k: int
    frontier: frozenset[str]
    tight: tuple[str, ...]
    residuals: tuple[tuple[str, frozenset[str]], ...]
    extension: frozenset[str]
    new_members: frozenset[Member]
    set_pairs: SetPairFamily

    def residual_of(self, x: str) -> frozenset[str]:
        return dict(self.residuals)[x]


@dataclass(frozen=True)
class AuditTrace:
    cover: CoverFamily
    root: str
    d1: int
    d2: int
    initial_members: frozenset[Member]
    levels: tuple[AuditLevel, ...]
    slack_levels: tuple[int, ...] = field(default=())

    @property
    def member_count(self) -> int:
        return len(self.cover.members)


def _touched_star(cover: CoverFamily, x: str, frontier: frozenset[str]) -> frozenset[Member]:
    return frozenset(m for m in cover.members if x in m and m & frontier)


def _property_one(cover: CoverFamily, frontier: frozenset[str], k: int) -> str | None:
    """None when every part-2 vertex has min(k, d(x)) touched star members,
    else a description of the first offender."""
    for x in cover.host.part2:
        need = min(k, cover.degree(x))
        have = len(_touched_star(cover, x, frontier))
        if have < need:
            return f"vertex {x!r} has {have} touched star members, needs {need}"
    return None


def audit_upper_bound(cover: CoverFamily, root: str | None = None) -> AuditTrace:
    """Run the frontier construction and check every structural invariant.

    Requires a minimal edge cover of a complete bipartite host with every
    element of every member essential (run prune_nonessential first).  The
    frontier starts at ``root`` (default: smallest part-1 label).
    """
    if not cover.host.is_bipartite():
        raise ContractError("audit requires a complete-bipartite host")
    if not is_minimal_edge_cover(cover):
        raise ContractError("audit requires a minimal edge cover")
    for m in cover.sorted_members():
        if essential_elements(cover, m) != m:
            raise ContractError(
                "audit requires all elements essential; apply prune_nonessential"
            )
    d1, d2 = part_degrees(cover)
    part1 = cover.host.part1
    if root is None:
        root = part1[0]
    elif root not in set(part1):
        raise ContractError(f"root {root!r} is not a part-1 vertex")

    frontier = frozenset({root})
    initial = frozenset(m for m in cover.members if m & frontier)
    offender = _property_one(cover, frontier, 1)
    if offender is not None:
        raise AuditFailure(1, "frontier property", offender)

    part1_set = frozenset(part1)
    levels: list[AuditLevel] = []
    slack: list[int] = []
    for k in range(1, d2):
        tight = tuple(
            x
            for x in cover.host.part2
            if cover.degree(x) > k and len(_touched_star(cover, x, frontier)) == k
        )
        residuals: dict[str, frozenset[str]] = {}
        for x in tight:
            touched = frozenset().union(*_touched_star(cover, x, frontier))
            res = part1_set - touched
            if not res:
                raise AuditFailure(k, "residual nonempty", f"vertex {x!r}")
            if res & frontier:
                raise AuditFailure(k, "residual disjoint from frontier", f"vertex {x!r}")
            residuals[x] = res
        extension = _minimal_transversal(residuals, part1, frontier)
        new_members = frozenset(
            m for m in cover.members if not m & frontier and m & extension
        )
        pairs = _extract_pairs(cover, k, frontier, tight, residuals, extension, d1)
        if not verify_cross_intersection(pairs):
            raise AuditFailure(k, "set pairs cross-intersecting")
        if bollobas_sum(pairs) > 1:
            raise AuditFailure(k, "set-pair sum at most one")
        if len(extension) <= 1:
            slack.append(k)
        levels.append(
            AuditLevel(
                k=k,
                frontier=frontier,
                tight=tight,
                residuals=tuple(sorted(residuals.items())),
                extension=extension,
                new_members=new_members,
                set_pairs=pairs,
            )
        )
        frontier = frontier | extension
        offender = _property_one(cover, frontier, k + 1)
        if offender is not None:
            raise AuditFailure(k + 1, "frontier property", offender)

    untouched = [m for m in cover.sorted_members() if not m & frontier]
    if untouched:
        raise AuditFailure(
            None, "all members touched", f"{len(untouched)} members missed"
        )
    _check_partition(initial, levels, cover)
    return AuditTrace(
        cover=cover,
        root=root,
        d1=d1,
        d2=d2,
        initial_members=initial,
        levels=tuple(levels),
        slack_levels=tuple(slack),
    )


def audit_all_roots(cover: CoverFamily) -> list[AuditTrace]:
    """Audit once per choice of starting part-1 vertex."""
    return [audit_upper_bound(cover, root=x) for x in cover.host.part1]


def _minimal_transversal(
    residuals: dict[str, frozenset[str]],
    part1: tuple[str, ...],
    frontier: frozenset[str],
) -> frozenset[str]:
    """Greedy transversal of the distinct residual sets, then delete-minimized.

    Candidates are scanned in label order, so the result is deterministic;
    any minimal transversal would do for the argument.
    """
    targets = sorted(set(residuals.values()), key=sorted)
    chosen: list[str] = []
    hit = [False] * len(targets)
    for y in part1:
        if y in frontier:
            continue
        gain = [i for i, t in enumerate(targets) if not hit[i] and y in t]
        if gain:
            chosen.append(y)
            for i in gain:
                hit[i] = True
        if all(hit):
            break
    assert all(hit), "residuals are nonempty so a transversal exists"
    for y in list(chosen):
        rest = [z for z in chosen if z != y]
        if all(any(z in t for z in rest) for t in targets):
            chosen = rest
    return frozenset(chosen)


def _extract_pairs(
    cover: CoverFamily,
    k: int,
    frontier: frozenset[str],
    tight: tuple[str, ...],
    residuals: dict[str, frozenset[str]],
    extension: frozenset[str],
    d1: int,
) -> SetPairFamily:
    pairs = []
    for y in sorted(extension):
        witness = next(
            (x for x in tight if residuals[x] & extension == {y}), None
        )
        if witness is None:
            raise AuditFailure(
                k, "witness vertex exists", f"no tight vertex isolates {y!r}"
            )
        a_members = frozenset(m for m in cover.members if y in m and m & frontier)
        b_members = _touched_star(cover, witness, frontier)
        if len(b_members) != k:
            raise AuditFailure(k, "witness star size equals level", f"pivot {y!r}")
        if a_members & b_members:
            raise AuditFailure(k, "pair sides disjoint", f"pivot {y!r}")
        if len(a_members) > d1 - 1:
            raise AuditFailure(k, "pivot star bound", f"pivot {y!r}")
        pairs.append(
            SetPair(pivot=y, witness=witness, a_members=a_members, b_members=b_members)
        )
    return SetPairFamily(pairs=tuple(pairs))


def extract_set_pairs(level: AuditLevel, cover: CoverFamily) -> SetPairFamily:
    """Recompute the set-pair family of an audited level from its data."""
    d1, _ = part_degrees(cover)
    return _extract_pairs(
        cover,
        level.k,
        level.frontier,
        level.tight,
        dict(level.residuals),
        level.extension,
        d1,
    )


def verify_cross_intersection(family: SetPairFamily) -> bool:
    """A side never meets its own partner but meets every other partner."""
    for i, p in enumerate(family.pairs):
        for j, q in enumerate(family.pairs):
            empty = not (p.a_members & q.b_members)
            if empty != (i == j):
                return False
    return True


def bollobas_sum(family: SetPairFamily) -> Fraction:
    """Sum of 1 / C(|A| + |B|, |B|) over the pairs, exactly.

    For cross-intersecting disjoint pairs this never exceeds 1; the caller
    may rely on the exact comparison.
    """
    if not verify_cross_intersection(family):
        raise ContractError("set pairs are not cross-intersecting")
    total = Fraction(0)
    for p in family.pairs:
        a, b = len(p.a_members), len(p.b_members)
        total += Fraction(1, comb(a + b, b))
    return total


def _check_partition(
    initial: frozenset[Member], levels: list[AuditLevel], cover: CoverFamily
) -> None:
    blocks = [initial] + [lv.new_members for lv in levels]
    seen: set[Member] = set()
    for b in blocks:
        if seen & b:
            raise AuditFailure(None, "member blocks disjoint")
        seen |= b
    if seen != cover.members:
        raise AuditFailure(None, "member blocks partition the family")


@dataclass(frozen=True)
class LevelBound:
    k: int
    extension_size: int
    extension_bound: int
    new_member_count: int
    new_member_bound: int
    slack: bool


@dataclass(frozen=True)
class LevelBoundsReport:
    d1: int
    d2: int
    initial_count: int
    initial_bound: int
    levels: tuple[LevelBound, ...]
    total: int
    final_bound: int

    @property
    def tight(self) -> bool:
        return self.total == self.final_bound


def level_bounds_check(trace: AuditTrace, d1: int, d2: int) -> LevelBoundsReport:
    """Check every counting bound of the audited argument at degrees
    (d1, d2), which must dominate the cover's part degrees.

    Per level k: |extension| <= C(d1+k-1, k) and |new members| bounded by
    (d1-1) * C(d1+k-1, k), relaxed to max(d1, ...) on slack levels where the
    extension is a single vertex.  Finally the member count must stay within
    (d1-1) * C(d1+d2-1, d2) + 1.
    """
    if d1 < trace.d1 or d2 < trace.d2:
        raise ContractError("degrees must dominate the cover's part degrees")
    if len(trace.initial_members) > d1:
        raise AuditFailure(None, "initial member bound", f"> {d1}")
    out: list[LevelBound] = []
    for lv in trace.levels:
        ext_bound = comb(d1 + lv.k - 1, lv.k)
        if len(lv.extension) > ext_bound:
            raise AuditFailure(lv.k, "extension size bound")
        slack = len(lv.extension) <= 1
        dk_bound = (d1 - 1) * ext_bound
        if slack:
            dk_bound = max(d1, dk_bound)
        if len(lv.new_members) > dk_bound:
            raise AuditFailure(lv.k, "new member bound")
        out.append(
            LevelBound(
                k=lv.k,
                extension_size=len(lv.extension),
                extension_bound=ext_bound,
                new_member_count=len(lv.new_members),
                new_member_bound=dk_bound,
                slack=slack,
            )
        )
    final_bound = (d1 - 1) * comb(d1 + d2 - 1, d2) + 1
    total = trace.member_count
    if total > final_bound:
        raise AuditFailure(None, "final member bound", f"{total} > {final_bound}")
    return LevelBoundsReport(
        d1=d1,
        d2=d2,
        initial_count=len(trace.initial_members),
        initial_bound=d1,
        levels=tuple(out),
        total=total,
        final_bound=final_bound,
    )
