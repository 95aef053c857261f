"""Open integer intervals and the claw machinery built on them.

Every interval in this package is an open interval (lo, hi) with integer
endpoints and positive length hi - lo.  Two open intervals intersect iff
max(lo1, lo2) < min(hi1, hi2); intervals that merely touch at an endpoint
are disjoint.

The workhorse quantity is alpha_window(S, l, r): the maximum number of
pairwise-disjoint members of S that each intersect the open window (l, r).
Members are not required to lie inside the window, only to meet it.  Since
endpoints are integers, each chosen member meets the window in a sub-window
of length at least 1, and those sub-windows are pairwise disjoint, so the
answer never exceeds r - l.  Induced stars reduce to the same quantity: a
family contains an induced star with t leaves iff some member intersects t
pairwise-disjoint members other than itself.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence


@dataclass(frozen=True, order=True)
class Interval:
    """Open interval (lo, hi) with integer endpoints, lo < hi."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo >= self.hi:
            raise ValueError(f"interval ({self.lo}, {self.hi}) is empty: need lo < hi")

    def __iter__(self) -> Iterator[int]:
        return iter((self.lo, self.hi))

    @property
    def length(self) -> int:
        return self.hi - self.lo


class Side(Enum):
    """Which part of a 2-partition a vertex belongs to."""

    FIRST = "FIRST"
    SECOND = "SECOND"

    def other(self) -> "Side":
        return Side.SECOND if self is Side.FIRST else Side.FIRST


@dataclass(frozen=True)
class PartitionAssignment:
    """A side per vertex index; the witness format for 2-partitions."""

    sides: tuple[Side, ...]

    def __len__(self) -> int:
        return len(self.sides)

    def side_of(self, index: int) -> Side:
        return self.sides[index]

    def part(self, side: Side) -> tuple[int, ...]:
        """Vertex indices assigned to the given side."""
        return tuple(i for i, s in enumerate(self.sides) if s is side)

    def swapped(self) -> "PartitionAssignment":
        return PartitionAssignment(tuple(s.other() for s in self.sides))


@dataclass(frozen=True)
class IntervalFamily:
    """Indexed sequence of intervals; vertex i of the graph is intervals[i].

    multiplicity is populated by dedup: it maps each distinct interval to how
    many copies the pre-dedup family contained.  Families built directly from
    input leave it None.
    """

    intervals: tuple[Interval, ...]
    multiplicity: Mapping[Interval, int] | None = field(default=None, compare=False)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "IntervalFamily":
        return cls(tuple(Interval(lo, hi) for lo, hi in pairs))

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __getitem__(self, index: int) -> Interval:
        return self.intervals[index]

    def subfamily(self, indices: Iterable[int]) -> "IntervalFamily":
        return IntervalFamily(tuple(self.intervals[i] for i in indices))


def intersects(x: Interval, y: Interval) -> bool:
    """True iff the two open intervals share a point."""
    return max(x.lo, y.lo) < min(x.hi, y.hi)


def _max_disjoint_meeting(intervals: Sequence[Interval], l: int, r: int) -> int:
    """Greedy maximum number of pairwise-disjoint intervals meeting open (l, r).

    Classic earliest-endpoint selection, which is optimal for maximum disjoint
    subfamilies of intervals; ties broken toward the lowest index.  Restricting
    to the members that meet the window first does not disturb optimality since
    any feasible subfamily consists of such members.
    """
    if l >= r:
        return 0
    candidates = [
        (iv.hi, idx) for idx, iv in enumerate(intervals) if max(iv.lo, l) < min(iv.hi, r)
    ]
    candidates.sort()
    count = 0
    frontier = None
    for hi, idx in candidates:
        lo = intervals[idx].lo
        if frontier is None or lo >= frontier:
            count += 1
            frontier = hi
    return count


def alpha_window(S: IntervalFamily, l: int, r: int) -> int:
    """Maximum size of a pairwise-disjoint subfamily of S meeting window (l, r).

    Args:
        S: interval family.
        l, r: window endpoints, l <= r.  An empty window (l == r) meets nothing.

    Returns:
        The independence number of S restricted to members intersecting (l, r).
    """
    if l > r:
        raise ValueError(f"window ({l}, {r}) reversed: need l <= r")
    return _max_disjoint_meeting(S.intervals, l, r)


def claw_number(S: IntervalFamily) -> int:
    """Largest t such that S contains an induced star with t leaves.

    S must be free of duplicate intervals (see dedup).  Equals the maximum,
    over centers c in S, of the number of pairwise-disjoint members of
    S minus {c} that intersect c.  0 for empty or edgeless families.
    """
    best = 0
    ivs = S.intervals
    for idx, center in enumerate(ivs):
        if center.length <= best:
            continue  # a center meets at most center.length disjoint others
        others = [iv for j, iv in enumerate(ivs) if j != idx]
        best = max(best, _max_disjoint_meeting(others, center.lo, center.hi))
    return best


def mid_relation(R: IntervalFamily, S: IntervalFamily, v: int) -> bool:
    """True iff every member of R meets at most v disjoint members of S.

    The member itself is excluded from its own neighbour count; families are
    expected duplicate-free so exclusion by value and by position coincide.

    Args:
        R: centers to check.
        S: family supplying the potential disjoint neighbours.
        v: the claw bound, v >= 1.

    Returns:
        False as soon as some center of R meets v + 1 pairwise-disjoint
        members of S other than itself, else True.
    """
    if v < 1:
        raise ValueError(f"claw bound v={v}: need v >= 1")
    for center in R.intervals:
        if center.length <= v:
            continue  # disjoint neighbours occupy disjoint unit sub-windows
        others = [iv for iv in S.intervals if iv != center]
        if _max_disjoint_meeting(others, center.lo, center.hi) > v:
            return False
    return True


def dedup(S: IntervalFamily) -> tuple[IntervalFamily, tuple[int, ...]]:
    """Collapse duplicate intervals, keeping first occurrences.

    Args:
        S: any interval family.

    Returns:
        (family, rep_of) where family holds the distinct intervals in order of
        first occurrence with multiplicity populated, and rep_of maps each
        original index to the index of its representative in family.  Any
        PartitionAssignment on the dedup'd family expands to the original by
        giving every copy the side of its representative (expand_assignment).
    """
    index_of: dict[Interval, int] = {}
    distinct: list[Interval] = []
    rep_of: list[int] = []
    for iv in S.intervals:
        pos = index_of.get(iv)
        if pos is None:
            pos = len(distinct)
            index_of[iv] = pos
            distinct.append(iv)
        rep_of.append(pos)
    counts = Counter(S.intervals)
    family = IntervalFamily(tuple(distinct), multiplicity=dict(counts))
    return family, tuple(rep_of)


def expand_assignment(rep_of: Sequence[int], assignment: PartitionAssignment) -> PartitionAssignment:
    """Lift an assignment on a dedup'd family back to the original indices."""
    return PartitionAssignment(tuple(assignment.sides[j] for j in rep_of))


def graph_claw_number(S: IntervalFamily) -> int:
    """Claw number of the graph represented by S, duplicates included.

    Duplicate intervals are adjacent twins: they can form an edge (a star with
    one leaf) but never join a larger star, because any leaf set is pairwise
    disjoint while a duplicate intersects everything its twin intersects.  So
    the answer is claw_number of the dedup'd family, bumped to 1 when that is
    0 but some interval repeats.
    """
    distinct, _ = dedup(S)
    base = claw_number(distinct)
    if base == 0 and len(distinct) < len(S):
        return 1
    return base
